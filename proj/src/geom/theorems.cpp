#include "geodiff/geom/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geodiff/error.hpp"
#include "geodiff/geom/formulas.hpp"

namespace geodiff::geom {
namespace {

constexpr double kAcosSlack = 1e-12;
constexpr double kSplitTolerance = 1e-9;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

double hypotenuse(double x, double y) {
  if (!positive_finite(x) || !positive_finite(y)) throw Error(ErrorKind::Domain, "legs must be positive");
  return formulas::hypotenuse(x, y);
}

double median(const Triangle& t) { return formulas::median(t.x(), t.y(), t.z()); }

double cevian(const Triangle& t, const CevianSplit& s) {
  const double total = s.m + s.n;
  if (std::abs(t.z() - total) > kSplitTolerance * std::max(t.z(), total)) {
    throw Error(ErrorKind::InconsistentSplit, "cevian split m + n must equal the z-side");
  }
  return formulas::cevian(t.x(), t.y(), s.m, s.n);
}

double triangle_area(const Triangle& t) { return formulas::triangle_area(t.x(), t.y(), t.z()); }

double angle_from_sides(const Triangle& t) {
  double c = formulas::cos_gamma(t.x(), t.y(), t.z());
  if (c > 1.0) {
    if (c > 1.0 + kAcosSlack) throw Error(ErrorKind::Domain, "cosine exceeds 1 beyond roundoff slack");
    c = 1.0;
  } else if (c < -1.0) {
    if (c < -1.0 - kAcosSlack) throw Error(ErrorKind::Domain, "cosine below -1 beyond roundoff slack");
    c = -1.0;
  }
  return std::acos(c);
}

double bisector_full(const Triangle& t) { return formulas::bisector_full(t.x(), t.y(), t.z()); }

double bisector_to_incenter(const Triangle& t) {
  return formulas::bisector_to_incenter(t.x(), t.y(), t.z());
}

double incenter_ratio(const Triangle& t) { return bisector_to_incenter(t) / bisector_full(t); }

double trirect_face_area(const TrirectTetra& tt) {
  return formulas::trirect_face_area(tt.x, tt.y, tt.z);
}

double inscribed_angle(double theta) {
  if (!(theta >= 0.0 && theta <= 2.0 * std::numbers::pi)) {
    throw Error(ErrorKind::Domain, "central angle must lie in [0, 2pi]");
  }
  return formulas::inscribed_angle(theta);
}

double circumradius(const Triangle& t) { return formulas::circumradius(t.x(), t.y(), t.z()); }

double inradius(const Triangle& t) { return formulas::inradius(t.x(), t.y(), t.z()); }

double euler_distance(const IncirclePair& p) { return formulas::euler_distance(p.r, p.R); }

double third_side(double x, double beta, double gamma) {
  if (!positive_finite(x)) throw Error(ErrorKind::Domain, "side must be positive");
  if (!(beta > 0.0) || !(gamma > 0.0)) throw Error(ErrorKind::Domain, "angles must be positive");
  if (!(beta + gamma < std::numbers::pi)) throw Error(ErrorKind::Domain, "angle sum must be below pi");
  return formulas::third_side(x, beta, gamma);
}

double ptolemy_diagonal(const CyclicQuad& q) {
  return formulas::ptolemy_diagonal(q.x(), q.y(), q.u(), q.v());
}

double cyclic_quad_area(const CyclicQuad& q) {
  return formulas::cyclic_quad_area(q.x(), q.y(), q.u(), q.v());
}

std::array<double, 3> incenter_segments(const Triangle& t) {
  const double x = t.x(), y = t.y(), z = t.z();
  return {formulas::bisector_to_incenter(y, z, x), formulas::bisector_to_incenter(z, x, y),
          formulas::bisector_to_incenter(x, y, z)};
}

}  // namespace geodiff::geom
