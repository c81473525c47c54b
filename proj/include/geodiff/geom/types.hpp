#pragma once

// Validated side-length configurations shared by the closed-form theorems
// and the coordinate oracle. Neither module may hold an unvalidated shape.
//
// Labeling convention (fixed, never swapped):
//   Triangle sides x, y, z; alpha, beta, gamma are the angles opposite
//   x, y, z. gamma sits between the x- and y-sides, so every median,
//   cevian and bisector op acts on gamma and lands on the z-side.
//   CyclicQuad sides x, y, u, v run in cyclic order; the diagonal z joins
//   the (v,x) and (y,u) vertices, splitting the quad into triangles
//   (x, y, z) and (u, v, z).

#include <array>

namespace geodiff::geom {

/// Relative margin applied to strict triangle/polygon inequalities.
inline constexpr double kDegeneracyMargin = 1e-12;

class Triangle {
 public:
  /// Throws ErrorKind::Domain unless x, y, z > 0 and each strict triangle
  /// inequality holds by at least eps_deg * perimeter.
  Triangle(double x, double y, double z, double eps_deg = kDegeneracyMargin);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double z() const noexcept { return z_; }
  double perimeter() const noexcept { return x_ + y_ + z_; }
  std::array<double, 3> sides() const noexcept { return {x_, y_, z_}; }

  /// Smallest of (x+y-z, y+z-x, z+x-y) divided by the perimeter.
  double degeneracy() const noexcept;

  Triangle scaled(double lambda) const { return {lambda * x_, lambda * y_, lambda * z_}; }

 private:
  double x_, y_, z_;
};

struct CevianSplit {
  CevianSplit(double m, double n);
  double m;
  double n;
};

class CyclicQuad {
 public:
  /// Each side must be positive and shorter than the sum of the other
  /// three by eps_deg * perimeter; that is exactly when a circumscribed
  /// configuration exists.
  CyclicQuad(double x, double y, double u, double v, double eps_deg = kDegeneracyMargin);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double u() const noexcept { return u_; }
  double v() const noexcept { return v_; }
  std::array<double, 4> sides() const noexcept { return {x_, y_, u_, v_}; }

 private:
  double x_, y_, u_, v_;
};

/// Trirectangular tetrahedron given by its three mutually perpendicular edges.
struct TrirectTetra {
  TrirectTetra(double x, double y, double z);
  double x, y, z;
};

/// Inradius r and circumradius R of one triangle. Requires R >= 2r up to a
/// relative slack of 1e-12, which absorbs roundoff on equilateral input.
struct IncirclePair {
  IncirclePair(double r, double R);
  double r;
  double R;
};

}  // namespace geodiff::geom
