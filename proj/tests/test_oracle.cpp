#include <doctest.h>

#include <cmath>
#include <numbers>

#include "geodiff/error.hpp"
#include "geodiff/geom/theorems.hpp"
#include "geodiff/oracle/oracle.hpp"
#include "geodiff/sampling.hpp"

using namespace geodiff;
using namespace geodiff::oracle;
namespace q = geodiff::oracle::quantity;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
}  // namespace

TEST_CASE("canonical embedding") {
  const auto e = embed_triangle(geom::Triangle(3, 4, 5));
  CHECK(std::abs(e.C.px - 1.8) < 1e-15);
  CHECK(std::abs(e.C.py - 2.4) < 1e-15);
  CHECK(std::abs(embed_triangle(geom::Triangle(1, 1, 1)).C.px - 0.5) < 1e-15);

  const auto f = embed_triangle(geom::Triangle(2, 3, 4));
  CHECK(rel(distance(f.A, f.C), 2) < 1e-14);
  CHECK(rel(distance(f.B, f.C), 3) < 1e-14);
  CHECK(rel(distance(f.A, f.B), 4) < 1e-14);
}

TEST_CASE("measured quantities on 3-4-5") {
  const auto e = embed_triangle(geom::Triangle(3, 4, 5));
  CHECK(rel(measure(e, q::Area{}), 6) < 1e-14);
  CHECK(rel(measure(e, q::Circumradius{}), 2.5) < 1e-14);
  CHECK(rel(measure(e, q::EulerDistance{}), std::sqrt(1.25)) < 1e-14);
  CHECK(rel(measure(e, q::Inradius{}), 1) < 1e-14);
  CHECK(rel(measure(e, q::AngleGamma{}), std::numbers::pi / 2) < 1e-14);
}

TEST_CASE("rigid motions leave measurements unchanged") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::for_case(3, 2, i);
    const auto t = random_triangle(rng);
    const auto e = embed_triangle(t);
    const auto m = e.moved(rng.uniform(0, 2 * std::numbers::pi), {rng.uniform(-50, 50), rng.uniform(-50, 50)});
    const Quantity all[] = {q::Median{},       q::Cevian{0.4 * t.z(), 0.6 * t.z()}, q::Area{}, q::AngleGamma{},
                            q::BisectorFull{}, q::BisectorToIncenter{}, q::Circumradius{}, q::Inradius{}};
    for (const auto& qty : all) CHECK(rel(measure(m, qty), measure(e, qty)) < 1e-10);
  }
}

TEST_CASE("cyclic construction") {
  const auto sq = embed_cyclic(geom::CyclicQuad(1, 1, 1, 1));
  CHECK(rel(sq.R, std::numbers::sqrt2 / 2) < 1e-12);
  for (double th : sq.theta) CHECK(std::abs(th - std::numbers::pi / 2) < 1e-10);

  const auto e = embed_cyclic(geom::CyclicQuad(1, 1, 1, 1.5));
  CHECK(std::abs(e.theta[0] + e.theta[1] + e.theta[2] + e.theta[3] - 2 * std::numbers::pi) < 1e-10);

  const geom::CyclicQuad qd(1, 2, 1.5, 1.8);
  const auto c = embed_cyclic(qd);
  CHECK(rel(cyclic_diagonal(c), geom::ptolemy_diagonal(qd)) < 1e-9);
  CHECK(rel(cyclic_area(c), geom::cyclic_quad_area(qd)) < 1e-9);
}

TEST_CASE("cyclic construction with the center outside is refused") {
  try {
    embed_cyclic(geom::CyclicQuad(1, 0.4, 0.4, 0.4));
    FAIL("expected NotConstructible");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotConstructible);
  }
}

TEST_CASE("trirectangular face") {
  CHECK(rel(measure_trirect(geom::TrirectTetra(1, 1, 1)), std::sqrt(3.0) / 2) < 1e-14);
  CHECK(rel(measure_trirect(geom::TrirectTetra(3, 4, 12)), geom::trirect_face_area(geom::TrirectTetra(3, 4, 12))) <
        1e-12);
  CHECK(rel(measure_trirect(geom::TrirectTetra(3, 1e-12, 1)), 1.5) < 1e-9);
}

TEST_CASE("angle and ray constructions") {
  CHECK(rel(right_triangle_hypotenuse(1, 1), std::numbers::sqrt2) < 1e-15);
  CHECK(rel(inscribed_angle_on_circle(2 * std::numbers::pi / 3), std::numbers::pi / 3) < 1e-14);
  CHECK(rel(inscribed_angle_on_circle(std::numbers::pi), std::numbers::pi / 2) < 1e-14);
  CHECK(rel(third_side_by_construction(2, 0.7, 1.1), geom::third_side(2, 0.7, 1.1)) < 1e-13);
}
