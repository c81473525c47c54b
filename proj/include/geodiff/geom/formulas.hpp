#pragma once

// Unvalidated closed forms, templated over the scalar so the same expression
// serves double evaluation, dual-number differentiation and the extended
// precision used by the ODE catalog. Callers validate; these only compute.
//
// The batch kernels (batch_*.cpp) mirror the operation order used here so
// that the scalar and SIMD paths round identically.

#include <cmath>

namespace geodiff::geom::formulas {

template <typename T>
T hypotenuse(T x, T y) {
  using std::sqrt;
  return sqrt(x * x + y * y);
}

// Median to the z-side.
template <typename T>
T median(T x, T y, T z) {
  using std::sqrt;
  return sqrt((x * x + y * y) * T(0.5) - z * z * T(0.25));
}

// Cevian from the gamma vertex to the point of the z-side at distance m from
// the x-side vertex (and n from the y-side vertex).
template <typename T>
T cevian(T x, T y, T m, T n) {
  using std::sqrt;
  return sqrt((n * (x * x - m * m) + m * (y * y - n * n)) / (m + n));
}

template <typename T>
T triangle_area(T x, T y, T z) {
  using std::sqrt;
  const T s = (x + y + z) * T(0.5);
  return sqrt(s * (s - x) * (s - y) * (s - z));
}

template <typename T>
T cos_gamma(T x, T y, T z) {
  return (x * x + y * y - z * z) / (T(2) * x * y);
}

// Full internal bisector of gamma. xy(1 - z^2/(x+y)^2) is evaluated in the
// factored form xy(x+y-z)(x+y+z)/(x+y)^2, which keeps accuracy on flat
// triangles.
template <typename T>
T bisector_full(T x, T y, T z) {
  using std::sqrt;
  const T p = x + y;
  return sqrt(x * y * (p - z) * (p + z)) / p;
}

// Vertex-to-incenter part of the gamma bisector.
template <typename T>
T bisector_to_incenter(T x, T y, T z) {
  using std::sqrt;
  return sqrt(x * y * (x + y - z) / (x + y + z));
}

template <typename T>
T trirect_face_area(T x, T y, T z) {
  using std::sqrt;
  const T xy = x * y * T(0.5);
  const T xz = x * z * T(0.5);
  const T yz = y * z * T(0.5);
  return sqrt(xy * xy + xz * xz + yz * yz);
}

template <typename T>
T inscribed_angle(T theta) {
  return theta * T(0.5);
}

template <typename T>
T circumradius(T x, T y, T z) {
  using std::sqrt;
  return x * y * z / sqrt((x + y + z) * (-x + y + z) * (x - y + z) * (x + y - z));
}

template <typename T>
T inradius(T x, T y, T z) {
  using std::sqrt;
  return sqrt((-x + y + z) * (x - y + z) * (x + y - z) / (T(4) * (x + y + z)));
}

// Incenter-circumcenter distance from the two radii.
template <typename T>
T euler_distance(T r, T R) {
  using std::sqrt;
  T d2 = R * (R - T(2) * r);
  if (d2 < T(0)) d2 = T(0);
  return sqrt(d2);
}

// Side opposite beta, given side x and the angles beta (between x and the
// z-side) and gamma (between x and y).
template <typename T>
T third_side(T x, T beta, T gamma) {
  using std::sin;
  return x * sin(beta) / sin(beta + gamma);
}

// Diagonal joining the (v,x) and (y,u) vertices of a cyclic quadrilateral.
template <typename T>
T ptolemy_diagonal(T x, T y, T u, T v) {
  using std::sqrt;
  return sqrt((u * x + v * y) * (v * x + u * y) / (u * v + x * y));
}

template <typename T>
T cyclic_quad_area(T x, T y, T u, T v) {
  using std::sqrt;
  const T s = (x + y + u + v) * T(0.5);
  return sqrt((s - x) * (s - y) * (s - u) * (s - v));
}

}  // namespace geodiff::geom::formulas
