#include <cmath>
#include <numbers>

#include "geodiff/error.hpp"
#include "geodiff/geom/bisector_problem.hpp"
#include "geodiff/geom/formulas.hpp"
#include "geodiff/geom/theorems.hpp"
#include "geodiff/homogeneity/homogeneity.hpp"

namespace geodiff::homogeneity {
namespace {

namespace f = geom::formulas;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::Domain, what);
}

void check_triangle(std::span<const double> p) { geom::Triangle(p[0], p[1], p[2]); }

std::vector<double> sample_triangle(Rng& rng) {
  const auto t = random_triangle(rng);
  return {t.x(), t.y(), t.z()};
}

FormulaDescriptor triangle_op(std::string name, int n, D (*fn)(D, D, D)) {
  FormulaDescriptor fd;
  fd.name = std::move(name);
  fd.n = n;
  fd.dims = {1, 1, 1};
  fd.evaluate = [fn](std::span<const D> v) { return fn(v[0], v[1], v[2]); };
  fd.check_domain = check_triangle;
  fd.sample = sample_triangle;
  return fd;
}

}  // namespace

std::vector<FormulaDescriptor> registry() {
  std::vector<FormulaDescriptor> out;

  {
    FormulaDescriptor fd;
    fd.name = "hypotenuse";
    fd.dims = {1, 1};
    fd.evaluate = [](std::span<const D> v) { return f::hypotenuse(v[0], v[1]); };
    fd.check_domain = [](std::span<const double> p) { geom::hypotenuse(p[0], p[1]); };
    fd.sample = [](Rng& rng) { return std::vector<double>{rng.log_uniform(0.1, 10), rng.log_uniform(0.1, 10)}; };
    out.push_back(fd);
  }
  out.push_back(triangle_op("median", 1, [](D x, D y, D z) { return f::median(x, y, z); }));
  {
    FormulaDescriptor fd;
    fd.name = "cevian";
    fd.dims = {1, 1, 1, 1};  // x, y, m, n
    fd.evaluate = [](std::span<const D> v) { return f::cevian(v[0], v[1], v[2], v[3]); };
    fd.check_domain = [](std::span<const double> p) {
      geom::cevian(geom::Triangle(p[0], p[1], p[2] + p[3]), geom::CevianSplit(p[2], p[3]));
    };
    fd.sample = [](Rng& rng) {
      const auto t = random_triangle(rng);
      const double m = t.z() * rng.uniform(0.05, 0.95);
      return std::vector<double>{t.x(), t.y(), m, t.z() - m};
    };
    out.push_back(fd);
  }
  out.push_back(triangle_op("triangle_area", 2, [](D x, D y, D z) { return f::triangle_area(x, y, z); }));
  out.push_back(triangle_op("angle_from_sides", 0, [](D x, D y, D z) { return acos(f::cos_gamma(x, y, z)); }));
  out.push_back(triangle_op("bisector_full", 1, [](D x, D y, D z) { return f::bisector_full(x, y, z); }));
  out.push_back(
      triangle_op("bisector_to_incenter", 1, [](D x, D y, D z) { return f::bisector_to_incenter(x, y, z); }));
  out.push_back(triangle_op("incenter_ratio", 0, [](D x, D y, D z) {
    return f::bisector_to_incenter(x, y, z) / f::bisector_full(x, y, z);
  }));
  {
    FormulaDescriptor fd;
    fd.name = "trirect_face_area";
    fd.n = 2;
    fd.dims = {1, 1, 1};
    fd.evaluate = [](std::span<const D> v) { return f::trirect_face_area(v[0], v[1], v[2]); };
    fd.check_domain = [](std::span<const double> p) { geom::TrirectTetra(p[0], p[1], p[2]); };
    fd.sample = [](Rng& rng) {
      const auto tt = random_trirect(rng);
      return std::vector<double>{tt.x, tt.y, tt.z};
    };
    out.push_back(fd);
  }
  {
    FormulaDescriptor fd;
    fd.name = "inscribed_angle";
    fd.n = 0;
    fd.dims = {0};
    fd.evaluate = [](std::span<const D> v) { return f::inscribed_angle(v[0]); };
    fd.check_domain = [](std::span<const double> p) { geom::inscribed_angle(p[0]); };
    fd.sample = [](Rng& rng) { return std::vector<double>{rng.uniform(0.01, 2 * std::numbers::pi - 0.01)}; };
    out.push_back(fd);
  }
  out.push_back(triangle_op("circumradius", 1, [](D x, D y, D z) { return f::circumradius(x, y, z); }));
  out.push_back(triangle_op("inradius", 1, [](D x, D y, D z) { return f::inradius(x, y, z); }));
  {
    FormulaDescriptor fd;
    fd.name = "euler_distance";
    fd.dims = {1, 1};  // r, R
    fd.evaluate = [](std::span<const D> v) { return f::euler_distance(v[0], v[1]); };
    fd.check_domain = [](std::span<const double> p) { geom::IncirclePair(p[0], p[1]); };
    fd.sample = [](Rng& rng) {
      const auto t = random_triangle(rng);
      return std::vector<double>{geom::inradius(t), geom::circumradius(t)};
    };
    out.push_back(fd);
  }
  {
    FormulaDescriptor fd;
    fd.name = "third_side";
    fd.dims = {1, 0, 0};  // x, beta, gamma
    fd.evaluate = [](std::span<const D> v) { return f::third_side(v[0], v[1], v[2]); };
    fd.check_domain = [](std::span<const double> p) { geom::third_side(p[0], p[1], p[2]); };
    fd.sample = [](Rng& rng) {
      for (;;) {
        const double beta = rng.uniform(0.05, 3.0), gamma = rng.uniform(0.05, 3.0);
        if (beta + gamma < std::numbers::pi - 0.05) {
          return std::vector<double>{rng.log_uniform(0.1, 10), beta, gamma};
        }
      }
    };
    out.push_back(fd);
  }
  {
    FormulaDescriptor fd;
    fd.name = "ptolemy_diagonal";
    fd.dims = {1, 1, 1, 1};
    fd.evaluate = [](std::span<const D> v) { return f::ptolemy_diagonal(v[0], v[1], v[2], v[3]); };
    fd.check_domain = [](std::span<const double> p) { geom::CyclicQuad(p[0], p[1], p[2], p[3]); };
    fd.sample = [](Rng& rng) {
      const auto q = random_cyclic_quad(rng);
      return std::vector<double>{q.x(), q.y(), q.u(), q.v()};
    };
    out.push_back(fd);
  }
  {
    FormulaDescriptor fd = out.back();
    fd.name = "cyclic_quad_area";
    fd.n = 2;
    fd.evaluate = [](std::span<const D> v) { return f::cyclic_quad_area(v[0], v[1], v[2], v[3]); };
    out.push_back(fd);
  }
  {
    FormulaDescriptor fd;
    fd.name = "bisector_problem_solve";
    fd.dims = {1, 1, 1};  // a, b, c -> z
    fd.evaluate = [](std::span<const D> v) { return sqrt(geom::bisector_side_squared(v[0], v[1], v[2])); };
    fd.check_domain = [](std::span<const double> p) {
      require(!geom::bisector_admissible_roots(p[0], p[1], p[2]).empty(), "no admissible side for these segments");
    };
    fd.sample = [](Rng& rng) {
      const auto s = geom::incenter_segments(random_triangle(rng));
      return std::vector<double>{s[0], s[1], s[2]};
    };
    out.push_back(fd);
  }
  {
    FormulaDescriptor fd;
    fd.name = "circle_area";
    fd.n = 2;
    fd.dims = {1};
    fd.evaluate = [](std::span<const D> v) { return D(std::numbers::pi) * v[0] * v[0]; };
    fd.check_domain = [](std::span<const double> p) {
      require(std::isfinite(p[0]) && p[0] > 0.0, "radius must be positive");
    };
    fd.sample = [](Rng& rng) { return std::vector<double>{rng.log_uniform(0.1, 10)}; };
    out.push_back(fd);
  }
  {
    FormulaDescriptor fd = out.back();
    fd.name = "sphere_volume";
    fd.n = 3;
    fd.evaluate = [](std::span<const D> v) { return D(4.0 * std::numbers::pi / 3.0) * v[0] * v[0] * v[0]; };
    out.push_back(fd);
  }
  return out;
}

}  // namespace geodiff::homogeneity
