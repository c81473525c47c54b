#include "geodiff/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "geodiff/error.hpp"

namespace geodiff::oracle {
namespace {

Point2 operator+(Point2 a, Point2 b) { return {a.px + b.px, a.py + b.py}; }
Point2 operator-(Point2 a, Point2 b) { return {a.px - b.px, a.py - b.py}; }
Point2 operator*(double s, Point2 a) { return {s * a.px, s * a.py}; }
double dot(Point2 a, Point2 b) { return a.px * b.px + a.py * b.py; }
double cross(Point2 a, Point2 b) { return a.px * b.py - a.py * b.px; }
double norm(Point2 a) { return std::hypot(a.px, a.py); }

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// Unsigned angle at `apex` between the rays to p and q.
double angle_at(Point2 apex, Point2 p, Point2 q) {
  const Point2 u = p - apex;
  const Point2 v = q - apex;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

// Point on segment from `from` toward `to` at distance `along`.
Point2 section_point(Point2 from, Point2 to, double along) {
  const Point2 d = to - from;
  return from + (along / norm(d)) * d;
}

}  // namespace

double distance(Point2 a, Point2 b) { return norm(b - a); }

TriangleEmbedding TriangleEmbedding::moved(double angle, Point2 shift) const {
  const double c = std::cos(angle), s = std::sin(angle);
  auto apply = [&](Point2 p) { return Point2{c * p.px - s * p.py + shift.px, s * p.px + c * p.py + shift.py}; };
  return {apply(A), apply(B), apply(C)};
}

TriangleEmbedding embed_triangle(const geom::Triangle& t) {
  const double x = t.x(), y = t.y(), z = t.z();
  const double foot = (x * x - y * y + z * z) / (2.0 * z);
  const double h2 = (x - foot) * (x + foot);
  if (!(h2 > 0.0)) throw Error(ErrorKind::InvariantViolation, "z-altitude squared is not positive");
  TriangleEmbedding e{{0.0, 0.0}, {z, 0.0}, {foot, std::sqrt(h2)}};

  if (rel_gap(distance(e.A, e.C), x) > 1e-12 || rel_gap(distance(e.B, e.C), y) > 1e-12 ||
      rel_gap(distance(e.A, e.B), z) > 1e-12) {
    throw Error(ErrorKind::InvariantViolation, "embedding does not reproduce the side lengths");
  }
  return e;
}

Point2 incenter(const TriangleEmbedding& e) {
  const double wa = distance(e.B, e.C);
  const double wb = distance(e.C, e.A);
  const double wc = distance(e.A, e.B);
  const double sum = wa + wb + wc;
  return {(wa * e.A.px + wb * e.B.px + wc * e.C.px) / sum, (wa * e.A.py + wb * e.B.py + wc * e.C.py) / sum};
}

Point2 circumcenter(const TriangleEmbedding& e) {
  // Intersection of the perpendicular bisectors of AB and AC, in coordinates
  // relative to A: the point p with p.b = |b|^2/2 and p.c = |c|^2/2.
  const Point2 b = e.B - e.A;
  const Point2 c = e.C - e.A;
  const double det = 2.0 * cross(b, c);
  const double bb = dot(b, b), cc = dot(c, c);
  const Point2 rel{(c.py * bb - b.py * cc) / det, (b.px * cc - c.px * bb) / det};
  return e.A + rel;
}

double measure(const TriangleEmbedding& e, const Quantity& q) {
  return std::visit(
      [&](const auto& tag) -> double {
        using Tag = std::decay_t<decltype(tag)>;
        if constexpr (std::is_same_v<Tag, quantity::Median>) {
          return distance(e.C, 0.5 * (e.A + e.B));
        } else if constexpr (std::is_same_v<Tag, quantity::Cevian>) {
          return distance(e.C, section_point(e.B, e.A, tag.n));
        } else if constexpr (std::is_same_v<Tag, quantity::Area>) {
          // Shoelace over A, B, C.
          const double twice = e.A.px * e.B.py - e.B.px * e.A.py + e.B.px * e.C.py - e.C.px * e.B.py +
                               e.C.px * e.A.py - e.A.px * e.C.py;
          return 0.5 * std::abs(twice);
        } else if constexpr (std::is_same_v<Tag, quantity::AngleGamma>) {
          return angle_at(e.C, e.A, e.B);
        } else if constexpr (std::is_same_v<Tag, quantity::BisectorFull>) {
          // The foot divides AB in the ratio |AC| : |BC| from A.
          const double x = distance(e.A, e.C), y = distance(e.B, e.C);
          return distance(e.C, e.A + (x / (x + y)) * (e.B - e.A));
        } else if constexpr (std::is_same_v<Tag, quantity::BisectorToIncenter>) {
          return distance(e.C, incenter(e));
        } else if constexpr (std::is_same_v<Tag, quantity::Circumradius>) {
          return distance(circumcenter(e), e.A);
        } else if constexpr (std::is_same_v<Tag, quantity::Inradius>) {
          const Point2 ab = e.B - e.A;
          return std::abs(cross(ab, incenter(e) - e.A)) / norm(ab);
        } else {
          return distance(circumcenter(e), incenter(e));
        }
      },
      q);
}

CyclicEmbedding embed_cyclic(const geom::CyclicQuad& q) {
  const auto sides = q.sides();
  auto angle_sum = [&](double R) {
    double sum = 0.0;
    for (double s : sides) sum += 2.0 * std::asin(std::min(1.0, s / (2.0 * R)));
    return sum;
  };
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  // The angle sum decreases monotonically in R.
  double lo = *std::max_element(sides.begin(), sides.end()) / 2.0;
  if (angle_sum(lo) < kTwoPi) {
    throw Error(ErrorKind::NotConstructible, "circumcenter would lie outside the quadrilateral");
  }
  double hi = 2.0 * lo;
  int grow = 0;
  while (angle_sum(hi) > kTwoPi) {
    hi *= 2.0;
    if (++grow > 200) throw Error(ErrorKind::NotConstructible, "no bracket for the circumradius");
  }
  double R = 0.5 * (lo + hi);
  for (int it = 0; it < 400; ++it) {
    R = 0.5 * (lo + hi);
    const double gap = angle_sum(R) - kTwoPi;
    if (std::abs(gap) < 1e-13 || hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * R) break;
    (gap > 0.0 ? lo : hi) = R;
  }

  CyclicEmbedding e;
  e.R = R;
  double phi = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    e.theta[i] = 2.0 * std::asin(std::min(1.0, sides[i] / (2.0 * R)));
    e.vertices[i] = {R * std::cos(phi), R * std::sin(phi)};
    phi += e.theta[i];
  }
  if (std::abs(phi - kTwoPi) > 1e-10) {
    throw Error(ErrorKind::InvariantViolation, "central angles do not close the circle");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (rel_gap(distance(e.vertices[i], e.vertices[(i + 1) % 4]), sides[i]) > 1e-10) {
      throw Error(ErrorKind::InvariantViolation, "embedded chord does not reproduce its side");
    }
  }
  return e;
}

double cyclic_diagonal(const CyclicEmbedding& e) { return distance(e.vertices[0], e.vertices[2]); }

double cyclic_area(const CyclicEmbedding& e) {
  double twice = 0.0;
  for (std::size_t i = 0; i < 4; ++i) twice += cross(e.vertices[i], e.vertices[(i + 1) % 4]);
  return 0.5 * std::abs(twice);
}

double measure_trirect(const geom::TrirectTetra& tt) {
  const Point3 p1{tt.x, 0.0, 0.0}, p2{0.0, tt.y, 0.0}, p3{0.0, 0.0, tt.z};
  const Point3 e1{p2.px - p1.px, p2.py - p1.py, p2.pz - p1.pz};
  const Point3 e2{p3.px - p1.px, p3.py - p1.py, p3.pz - p1.pz};
  const Point3 n{e1.py * e2.pz - e1.pz * e2.py, e1.pz * e2.px - e1.px * e2.pz, e1.px * e2.py - e1.py * e2.px};
  return 0.5 * std::sqrt(n.px * n.px + n.py * n.py + n.pz * n.pz);
}

double right_triangle_hypotenuse(double x, double y) { return distance({x, 0.0}, {0.0, y}); }

double inscribed_angle_on_circle(double theta) {
  const Point2 a{std::cos(-0.5 * theta), std::sin(-0.5 * theta)};
  const Point2 b{std::cos(0.5 * theta), std::sin(0.5 * theta)};
  return angle_at({-1.0, 0.0}, a, b);
}

double third_side_by_construction(double x, double beta, double gamma) {
  // Base from P=(0,0) to Q=(x,0); rays at gamma from P and pi-beta from Q.
  const Point2 p{0.0, 0.0}, q{x, 0.0};
  const Point2 d1{std::cos(gamma), std::sin(gamma)};
  const Point2 d2{-std::cos(beta), std::sin(beta)};
  // p + s d1 = q + u d2  =>  s = cross(q - p, d2) / cross(d1, d2)
  const double s = cross(q - p, d2) / cross(d1, d2);
  return distance(p, p + s * d1);
}

}  // namespace geodiff::oracle
