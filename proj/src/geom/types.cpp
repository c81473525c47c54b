#include "geodiff/geom/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geodiff/error.hpp"

namespace geodiff::geom {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

[[noreturn]] void domain(const std::string& msg) { throw Error(ErrorKind::Domain, msg); }

std::string fmt3(const char* what, double a, double b, double c) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

Triangle::Triangle(double x, double y, double z, double eps_deg) : x_(x), y_(y), z_(z) {
  if (!positive_finite(x) || !positive_finite(y) || !positive_finite(z)) {
    domain(fmt3("triangle sides must be positive and finite:", x, y, z));
  }
  if (!(eps_deg >= 0.0)) domain("degeneracy margin must be non-negative");
  if (!(degeneracy() > eps_deg)) {
    domain(fmt3("triangle inequality violated or too close to degenerate:", x, y, z));
  }
}

double Triangle::degeneracy() const noexcept {
  const double slack = std::min({x_ + y_ - z_, y_ + z_ - x_, z_ + x_ - y_});
  return slack / perimeter();
}

CevianSplit::CevianSplit(double m_, double n_) : m(m_), n(n_) {
  if (!positive_finite(m) || !positive_finite(n)) domain("cevian split segments must be positive");
}

CyclicQuad::CyclicQuad(double x, double y, double u, double v, double eps_deg)
    : x_(x), y_(y), u_(u), v_(v) {
  const std::array<double, 4> s{x, y, u, v};
  for (double side : s) {
    if (!positive_finite(side)) domain("cyclic quadrilateral sides must be positive and finite");
  }
  const double perimeter = x + y + u + v;
  for (double side : s) {
    if (!(perimeter - 2.0 * side > eps_deg * perimeter)) {
      domain("cyclic quadrilateral side is not shorter than the sum of the other three");
    }
  }
}

TrirectTetra::TrirectTetra(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
  if (!positive_finite(x) || !positive_finite(y) || !positive_finite(z)) {
    domain(fmt3("trirectangular edges must be positive:", x, y, z));
  }
}

IncirclePair::IncirclePair(double r_, double R_) : r(r_), R(R_) {
  if (!positive_finite(r) || !positive_finite(R)) domain("radii must be positive and finite");
  if (R < 2.0 * r * (1.0 - 1e-12)) domain("circumradius below twice the inradius: no such triangle");
}

}  // namespace geodiff::geom
