#pragma once

// Inverse angle-bisector problem: recover the sides (x, y, z) of a triangle
// from the vertex-to-incenter segments (a, b, c) of the bisectors of the
// angles opposite x, y, z.
//
// For the side z, with p = a^2 + b^2 and q = a^2 b^2, the half-angle
// relations sin(gamma/2) = (z^2 - p)/(2ab) and cos(gamma/2) = c z sin(gamma/2)/(ab)
// combine through sin^2 + cos^2 = 1 into a cubic in w = z^2:
//
//   (w - p)^2 (q + c^2 w) = 4 q^2,
//
// the squared form of sqrt(((a+b)^2 - z^2)(z^2 - (a-b)^2)) / (z (z^2 - a^2 - b^2)) = c/(ab).
// The sign of the constant is +1/(ab): the angle between the a- and
// b-segments at the incenter is pi/2 + gamma/2, so z^2 > a^2 + b^2 and the
// left side is positive. The admissible interval is p < w < (a+b)^2.
//
// The other two sides follow by rotating the roles of (a, b, c).

#include <array>
#include <vector>

#include "geodiff/geom/types.hpp"

namespace geodiff::geom {

/// Coefficients (B, C, D) of the monic cubic w^3 + B w^2 + C w + D whose
/// admissible root is the squared side opposite the angle bisected by `c`.
template <typename T>
std::array<T, 3> bisector_cubic(T a, T b, T c) {
  const T p = a * a + b * b;
  const T q = a * a * b * b;
  const T k = q / (c * c);
  const T diff = a * a - b * b;
  return {k - T(2) * p, p * p - T(2) * p * k, k * diff * diff};
}

/// Real roots of the monic cubic in w for (a, b, c), started from the
/// trigonometric (or hyperbolic) closed form of the depressed cubic and
/// polished by Newton. Only roots inside (a^2+b^2, (a+b)^2) are returned.
std::vector<double> bisector_admissible_roots(double a, double b, double c);

/// Squared side opposite the c-bisected angle. The root is located in double
/// precision and then refined by Newton steps carried out in T, so that T may
/// be a dual number (giving the implicit derivative) or an extended type.
template <typename T>
T bisector_side_squared(T a, T b, T c);

/// Full inverse problem. Each side is solved from its own cubic; candidate
/// triples are kept only if the forward map reproduces (a, b, c) within 1e-8
/// relative. Throws ErrorKind::NoTriangle when nothing round-trips and
/// ErrorKind::Ambiguous when several triples do.
Triangle bisector_problem_solve(double a, double b, double c);

}  // namespace geodiff::geom

#include "geodiff/geom/bisector_problem_impl.hpp"
