#include <doctest.h>

#include <cmath>
#include <numbers>

#include "geodiff/derive/derive.hpp"
#include "geodiff/error.hpp"

using namespace geodiff;
using namespace geodiff::derive;

namespace {

const std::vector<Real> kH{0.1L, 0.01L, 0.001L};

double rel(Real a, Real b) { return static_cast<double>(std::abs(a - b) / std::abs(b)); }

}  // namespace

TEST_CASE("catalog shape") {
  const auto cat = catalog();
  REQUIRE(cat.size() == 21);
  for (std::size_t i = 0; i < cat.size(); ++i) CHECK(cat[i].id == static_cast<int>(i + 1));
  for (const char* name : {"ptolemy", "inradius", "bisprob", "heron_alt"}) CHECK_FALSE(find(name).anchored);
  CHECK_THROWS_AS(find("nope"), Error);
}

TEST_CASE("anchors satisfy their closed forms") {
  for (const auto& p : catalog()) {
    if (!p.anchored) continue;
    CAPTURE(p.name);
    const Real c = p.closed(p.s_begin);
    if (p.anchor_value == 0) {
      CHECK(std::abs(c) < 1e-15L);
    } else {
      CHECK(rel(c, p.anchor_value) < 1e-12);
    }
  }
}

TEST_CASE("integration examples") {
  CHECK(std::abs(integrate(find("pythagoras"), 1e-3L) - 5) < 1e-10L);
  CHECK(std::abs(integrate(find("circle_area"), 1e-3L) - std::numbers::pi_v<Real>) < 1e-10L);
  const auto heron = find("heron");
  CHECK(heron.s_begin == std::sqrt(41.0L));
  CHECK(heron.s_end == 3);
  CHECK(std::abs(integrate(heron, 1e-3L) - 6) < 1e-8L);
}

TEST_CASE("a step count that lands on a pole raises Singularity") {
  OdeProblem p;
  p.name = "pole";
  p.s_begin = -1;
  p.s_end = 1;
  p.rhs = [](Real s, Real) { return 1 / s; };
  p.closed_form = [](DualR s) { return s; };
  try {
    integrate(p, 0.5L);
    FAIL("expected Singularity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singularity);
  }
}

TEST_CASE("residual examples") {
  OdeProblem pyth;
  pyth.name = "pyth_y1";
  pyth.anchored = false;
  pyth.s_begin = 0.1L;
  pyth.s_end = 10;
  pyth.rhs = [](Real s, Real f) { return s / f; };
  pyth.closed_form = [](DualR s) { return sqrt(s * s + DualR(1)); };
  CHECK(residual(pyth, 1000).max_relative < 1e-12L);

  CHECK(residual(find("ptolemy"), 1000).max_relative < 1e-10L);
  const auto inr = find("inradius");
  CHECK(inr.s_begin == doctest::Approx(1.2));
  CHECK(inr.s_end == doctest::Approx(6.8));
  CHECK(residual(inr, 1000).max_relative < 1e-9L);
}

TEST_CASE("every residual-mode entry is below 1e-8") {
  for (const auto& p : catalog()) {
    CAPTURE(p.name);
    const auto r = residual(p, 1000);
    CHECK(r.evaluated + r.skipped.size() == 1000);
    CHECK(r.max_relative < 1e-8L);
  }
}

TEST_CASE("convergence order") {
  const auto py = convergence(find("pythagoras"), kH);
  REQUIRE(py.order);
  CHECK(*py.order >= 3.5L);
  CHECK(*py.order <= 4.5L);

  const auto ak = convergence(find("alkashi"), kH);
  REQUIRE(ak.order);
  CHECK(*ak.order >= 3.5L);
  CHECK(*ak.order <= 4.5L);

  const auto ins = convergence(find("inscribed"), kH);
  CHECK_FALSE(ins.order);
  for (Real e : ins.errors) CHECK(e <= 1e-14L);
}

TEST_CASE("every anchored entry converges") {
  for (const auto& p : catalog()) {
    if (!p.anchored) continue;
    CAPTURE(p.name);
    const auto c = convergence(p, kH);
    CHECK(c.errors.back() < 1e-7L);
    if (p.rk4_exact) {
      for (Real e : c.errors) CHECK(e <= 1e-12L);
    } else {
      REQUIRE(c.order);
      CHECK(*c.order >= 3.5L);
      CHECK(*c.order <= 4.5L);
    }
  }
}

TEST_CASE("two derivations of the hypotenuse agree") {
  CHECK(std::abs(integrate(find("pyth_alt"), 1e-3L) - integrate(find("pythagoras"), 1e-3L)) < 1e-8L);
}

TEST_CASE("order fit recovers a synthetic slope") {
  const std::vector<Real> h{0.1L, 0.01L, 0.001L};
  const std::vector<Real> e{3e-4L, 3e-8L, 3e-12L};
  CHECK(std::abs(fit_order(h, e) - 4) < 1e-12L);
  CHECK_THROWS_AS(convergence(find("pythagoras"), {0.1L, 0.01L}), Error);
}
