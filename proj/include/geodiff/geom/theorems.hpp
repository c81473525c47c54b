#pragma once

// Closed-form theorem operations on validated inputs. Angles are radians.
// All functions are pure; invalid input raises geodiff::Error.

#include <array>

#include "geodiff/geom/types.hpp"

namespace geodiff::geom {

/// Hypotenuse of the right triangle with legs x and y.
double hypotenuse(double x, double y);

/// Median from the gamma vertex to the midpoint of the z-side.
double median(const Triangle& t);

/// Cevian from the gamma vertex to the z-side point at distance s.m from the
/// x-side vertex. Throws ErrorKind::InconsistentSplit unless z == m + n to a
/// relative 1e-9.
double cevian(const Triangle& t, const CevianSplit& s);

double triangle_area(const Triangle& t);

/// Angle gamma between the x- and y-sides, in (0, pi). The cosine is clamped
/// into [-1, 1] only when it overshoots by at most 1e-12.
double angle_from_sides(const Triangle& t);

/// Internal bisector of gamma, vertex to foot.
double bisector_full(const Triangle& t);

/// Internal bisector of gamma, vertex to incenter.
double bisector_to_incenter(const Triangle& t);

/// bisector_to_incenter / bisector_full, which equals (x+y)/(x+y+z).
double incenter_ratio(const Triangle& t);

/// Area of the face opposite the right-angle corner.
double trirect_face_area(const TrirectTetra& tt);

/// Inscribed angle subtending the same arc as central angle theta in [0, 2pi].
double inscribed_angle(double theta);

double circumradius(const Triangle& t);
double inradius(const Triangle& t);

/// Distance between incenter and circumcenter.
double euler_distance(const IncirclePair& p);

/// Side opposite beta, from side x, beta (between x and the z-side) and gamma
/// (between x and y). Requires beta, gamma > 0 and beta + gamma < pi.
double third_side(double x, double beta, double gamma);

double ptolemy_diagonal(const CyclicQuad& q);
double cyclic_quad_area(const CyclicQuad& q);

/// Vertex-to-incenter bisector segments (a, b, c) for the angles opposite
/// (x, y, z). This is the forward map inverted by bisector_problem_solve.
std::array<double, 3> incenter_segments(const Triangle& t);

}  // namespace geodiff::geom
