// AArch64 Advanced SIMD kernels, two doubles per register. Operation order
// follows formulas.hpp; the odd tail element uses the scalar kernel.

#include <arm_neon.h>

#include "geodiff/geom/batch.hpp"

namespace geodiff::geom::batch::detail {
namespace {

using V = float64x2_t;

inline V add(V a, V b) { return vaddq_f64(a, b); }
inline V sub(V a, V b) { return vsubq_f64(a, b); }
inline V mul(V a, V b) { return vmulq_f64(a, b); }
inline V div(V a, V b) { return vdivq_f64(a, b); }
inline V sqrt(V a) { return vsqrtq_f64(a); }
inline V splat(double a) { return vdupq_n_f64(a); }

struct Hypotenuse {
  static V eval(V x, V y, V) { return sqrt(add(mul(x, x), mul(y, y))); }
};

struct Median {
  static V eval(V x, V y, V z) {
    return sqrt(sub(mul(add(mul(x, x), mul(y, y)), splat(0.5)), mul(mul(z, z), splat(0.25))));
  }
};

struct TriangleArea {
  static V eval(V x, V y, V z) {
    const V s = mul(add(add(x, y), z), splat(0.5));
    return sqrt(mul(mul(mul(s, sub(s, x)), sub(s, y)), sub(s, z)));
  }
};

struct BisectorFull {
  static V eval(V x, V y, V z) {
    const V p = add(x, y);
    return div(sqrt(mul(mul(mul(x, y), sub(p, z)), add(p, z))), p);
  }
};

struct BisectorToIncenter {
  static V eval(V x, V y, V z) {
    return sqrt(div(mul(mul(x, y), sub(add(x, y), z)), add(add(x, y), z)));
  }
};

struct Circumradius {
  static V eval(V x, V y, V z) {
    const V nx = vnegq_f64(x);
    const V prod = mul(mul(mul(add(add(x, y), z), add(add(nx, y), z)), add(sub(x, y), z)), sub(add(x, y), z));
    return div(mul(mul(x, y), z), sqrt(prod));
  }
};

struct Inradius {
  static V eval(V x, V y, V z) {
    const V nx = vnegq_f64(x);
    const V num = mul(mul(add(add(nx, y), z), add(sub(x, y), z)), sub(add(x, y), z));
    return sqrt(div(num, mul(splat(4.0), add(add(x, y), z))));
  }
};

template <Op O, typename K>
void kernel(const double* x, const double* y, const double* z, double* out, std::size_t n) {
  std::size_t i = 0;
  const V zero = vdupq_n_f64(0.0);
  for (; i + 2 <= n; i += 2) {
    const V vz = z ? vld1q_f64(z + i) : zero;
    vst1q_f64(out + i, K::eval(vld1q_f64(x + i), vld1q_f64(y + i), vz));
  }
  if (i < n) scalar_kernel(O)(x + i, y + i, z ? z + i : nullptr, out + i, n - i);
}

}  // namespace

Kernel neon_kernel(Op op) noexcept {
  switch (op) {
    case Op::Hypotenuse: return kernel<Op::Hypotenuse, Hypotenuse>;
    case Op::Median: return kernel<Op::Median, Median>;
    case Op::TriangleArea: return kernel<Op::TriangleArea, TriangleArea>;
    case Op::BisectorFull: return kernel<Op::BisectorFull, BisectorFull>;
    case Op::BisectorToIncenter: return kernel<Op::BisectorToIncenter, BisectorToIncenter>;
    case Op::Circumradius: return kernel<Op::Circumradius, Circumradius>;
    case Op::Inradius: return kernel<Op::Inradius, Inradius>;
  }
  return nullptr;
}

}  // namespace geodiff::geom::batch::detail
