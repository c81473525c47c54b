#pragma once

#include "geodiff/error.hpp"
#include "geodiff/homogeneity/dual.hpp"

namespace geodiff::geom {

template <typename T>
T bisector_side_squared(T a, T b, T c) {
  using homogeneity::value_of;
  const auto roots = bisector_admissible_roots(static_cast<double>(value_of(a)),
                                               static_cast<double>(value_of(b)),
                                               static_cast<double>(value_of(c)));
  if (roots.empty()) throw Error(ErrorKind::NoTriangle, "bisector cubic has no admissible root");
  if (roots.size() > 1) throw Error(ErrorKind::Ambiguous, "bisector cubic has several admissible roots");

  const auto [B, C, D] = bisector_cubic(a, b, c);
  T w = T(roots.front());
  // At a converged root each step changes the value by roundoff only; with a
  // dual T the step carries -f_theta/f_w, the implicit derivative.
  for (int i = 0; i < 2; ++i) {
    const T f = ((w + B) * w + C) * w + D;
    const T df = (T(3) * w + T(2) * B) * w + C;
    w = w - f / df;
  }
  return w;
}

}  // namespace geodiff::geom
