#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "geodiff/error.hpp"
#include "geodiff/homogeneity/homogeneity.hpp"

using namespace geodiff;
using namespace geodiff::homogeneity;

namespace {

const FormulaDescriptor& by_name(const std::vector<FormulaDescriptor>& reg, const std::string& name) {
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& f) { return f.name == name; });
  REQUIRE(it != reg.end());
  return *it;
}

}  // namespace

TEST_CASE("dual arithmetic") {
  const D x = D::variable(2.0);
  const D f = x * x * x / (x + D(1.0));  // x^3/(x+1), f' = (2x^3 + 3x^2)/(x+1)^2
  CHECK(f.val == doctest::Approx(8.0 / 3));
  CHECK(f.der == doctest::Approx(28.0 / 9).epsilon(1e-15));
  const D g = sqrt(x) * sin(x);
  CHECK(g.der == doctest::Approx(std::sin(2.0) / (2 * std::sqrt(2.0)) + std::sqrt(2.0) * std::cos(2.0)));
}

TEST_CASE("registry layout") {
  const auto reg = registry();
  // 17 theorem ops plus circle area and sphere volume.
  CHECK(reg.size() == 19);
  const auto& e = by_name(reg, "euler_distance");
  CHECK(e.n == 1);
  CHECK(e.dims == std::vector<int>{1, 1});
  const auto& t = by_name(reg, "trirect_face_area");
  CHECK(t.n == 2);
  CHECK(t.dims == std::vector<int>{1, 1, 1});
  CHECK(by_name(reg, "circle_area").n == 2);
  CHECK(by_name(reg, "sphere_volume").n == 3);
  CHECK(by_name(reg, "angle_from_sides").n == 0);
}

TEST_CASE("scale residual examples") {
  const auto reg = registry();
  const std::vector<double> p345{3, 4, 5};
  CHECK(scale_residual(by_name(reg, "triangle_area"), p345) < 1e-12);
  const auto& ts = by_name(reg, "third_side");
  CHECK(ts.dims == std::vector<int>{1, 0, 0});
  const std::vector<double> ps{2, 0.7, 1.1};
  CHECK(scale_residual(ts, ps) < 1e-12);
  const std::vector<double> p234{2, 3, 4};
  CHECK(scale_residual(by_name(reg, "angle_from_sides"), p234) < 1e-12);
}

TEST_CASE("out-of-domain point is rejected") {
  const auto reg = registry();
  const std::vector<double> bad{1, 2, 3};
  CHECK_THROWS_AS(scale_residual(by_name(reg, "triangle_area"), bad), Error);
}

TEST_CASE("a formula with the wrong dimension fails the identity") {
  auto fd = by_name(registry(), "triangle_area");
  fd.n = 1;
  const std::vector<double> p{3, 4, 5};
  CHECK(scale_residual(fd, p) > 0.5);
}

TEST_CASE("identity, finite scaling and dual-vs-difference on random points") {
  const auto reg = registry();
  for (std::size_t k = 0; k < reg.size(); ++k) {
    const auto& fd = reg[k];
    CAPTURE(fd.name);
    for (std::uint64_t i = 0; i < 300; ++i) {
      Rng rng = Rng::for_case(21, k, i);
      const auto pt = fd.sample(rng);
      CHECK(scale_residual(fd, pt) < 1e-10);
      CHECK(scaling_error(fd, pt, 0.5) < 1e-12);
      CHECK(scaling_error(fd, pt, 2.0) < 1e-12);
      const double f0 = fd.value(pt);
      for (std::size_t j = 0; j < fd.arity(); ++j) {
        const double step = 1e-6 * std::abs(pt[j]);
        auto up = pt, dn = pt;
        up[j] += step;
        dn[j] -= step;
        const double fd_der = (fd.value(up) - fd.value(dn)) / (2 * step);
        const double ad = fd.partial(pt, j);
        const double norm = std::max(std::abs(ad), std::abs(f0) / std::abs(pt[j]));
        CHECK(std::abs(fd_der - ad) <= 1e-6 * norm);
      }
    }
  }
}
