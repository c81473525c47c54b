#pragma once

// Coordinate-geometry ground truth. Every quantity is measured on explicit
// vertex coordinates (midpoints, section points, line intersections, the
// shoelace sum, atan2) and never through a theorem formula. This library
// links against the validated types only.

#include <array>
#include <span>
#include <variant>

#include "geodiff/geom/types.hpp"

namespace geodiff::oracle {

struct Point2 {
  double px = 0.0;
  double py = 0.0;
};

struct Point3 {
  double px = 0.0, py = 0.0, pz = 0.0;
};

double distance(Point2 a, Point2 b);

/// Triangle placed with vertices A (x/z corner), B (y/z corner) and C (the
/// gamma corner between x and y), so that |AC| = x, |BC| = y and |AB| = z.
/// The canonical embedding is A = (0,0), B = (z,0), C = (t, h_z) with
/// t = (x^2 - y^2 + z^2)/(2z), the foot offset of the z-altitude.
struct TriangleEmbedding {
  Point2 A, B, C;

  /// Apply a rotation by `angle` followed by a translation.
  TriangleEmbedding moved(double angle, Point2 shift) const;
};

/// Throws ErrorKind::InvariantViolation if h_z^2 <= 0 or re-measured sides
/// miss the input by more than 1e-12 relative.
TriangleEmbedding embed_triangle(const geom::Triangle& t);

namespace quantity {
struct Median {};
struct Cevian {
  double m;  // distance of the foot from A
  double n;  // distance of the foot from B
};
struct Area {};
struct AngleGamma {};
struct BisectorFull {};
struct BisectorToIncenter {};
struct Circumradius {};
struct Inradius {};
struct EulerDistance {};
}  // namespace quantity

using Quantity =
    std::variant<quantity::Median, quantity::Cevian, quantity::Area, quantity::AngleGamma, quantity::BisectorFull,
                 quantity::BisectorToIncenter, quantity::Circumradius, quantity::Inradius, quantity::EulerDistance>;

/// Measure one quantity on an arbitrary (possibly moved) embedding.
double measure(const TriangleEmbedding& e, const Quantity& q);

// Constructed points, exposed for tests.
Point2 incenter(const TriangleEmbedding& e);
Point2 circumcenter(const TriangleEmbedding& e);

/// Cyclic quadrilateral on a circle of radius R. theta[i] is the central
/// angle subtended by side i (x, y, u, v in order); vertex 0 sits between
/// v and x.
struct CyclicEmbedding {
  double R = 0.0;
  std::array<double, 4> theta{};
  std::array<Point2, 4> vertices{};
};

/// Finds R by bisection so that the central angles sum to 2pi. Only the
/// configuration with the circumcenter inside the quadrilateral is
/// supported; other inputs raise ErrorKind::NotConstructible.
CyclicEmbedding embed_cyclic(const geom::CyclicQuad& q);

/// Distance between vertex 0 (v,x corner) and vertex 2 (y,u corner).
double cyclic_diagonal(const CyclicEmbedding& e);

/// Shoelace area of the embedded quadrilateral.
double cyclic_area(const CyclicEmbedding& e);

/// Right corner at the origin, edges along the axes; half the cross-product
/// norm of two edges of the opposite face.
double measure_trirect(const geom::TrirectTetra& tt);

/// Legs placed on the axes; distance between their free ends.
double right_triangle_hypotenuse(double x, double y);

/// Angle at a point of the complementary arc, subtending a chord whose
/// central angle is theta, on the unit circle. theta in (0, 2pi).
double inscribed_angle_on_circle(double theta);

/// Side opposite beta in the triangle built from a base of length x and the
/// two rays leaving its ends at angles gamma and beta.
double third_side_by_construction(double x, double beta, double gamma);

}  // namespace geodiff::oracle
