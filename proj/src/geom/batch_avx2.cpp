// AVX2 kernels, four doubles per lane group. Each expression repeats the
// operation order of formulas.hpp so results match the scalar path bit for
// bit; the tail falls back to the scalar kernel.

#include <immintrin.h>

#include "geodiff/geom/batch.hpp"

namespace geodiff::geom::batch::detail {
namespace {

using V = __m256d;

inline V add(V a, V b) { return _mm256_add_pd(a, b); }
inline V sub(V a, V b) { return _mm256_sub_pd(a, b); }
inline V mul(V a, V b) { return _mm256_mul_pd(a, b); }
inline V div(V a, V b) { return _mm256_div_pd(a, b); }
inline V sqrt(V a) { return _mm256_sqrt_pd(a); }
inline V splat(double a) { return _mm256_set1_pd(a); }

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
    const V nx = sub(splat(0.0), x);
    const V prod = mul(mul(mul(add(add(x, y), z), add(add(nx, y), z)), add(sub(x, y), z)), sub(add(x, y), z));
    return div(mul(mul(x, y), z), sqrt(prod));
  }
};

struct Inradius {
  static V eval(V x, V y, V z) {
    const V nx = sub(splat(0.0), x);
    const V num = mul(mul(add(add(nx, y), z), add(sub(x, y), z)), sub(add(x, y), z));
    return sqrt(div(num, mul(splat(4.0), add(add(x, y), z))));
  }
};

template <typename K>
void run(Op op, const double* x, const double* y, const double* z, double* out, std::size_t n) {
  std::size_t i = 0;
  const V zero = _mm256_setzero_pd();
  for (; i + 4 <= n; i += 4) {
    const V vx = _mm256_loadu_pd(x + i);
    const V vy = _mm256_loadu_pd(y + i);
    const V vz = z ? _mm256_loadu_pd(z + i) : zero;
    _mm256_storeu_pd(out + i, K::eval(vx, vy, vz));
  }
  if (i < n) scalar_kernel(op)(x + i, y + i, z ? z + i : nullptr, out + i, n - i);
}

template <Op O, typename K>
void kernel(const double* x, const double* y, const double* z, double* out, std::size_t n) {
  run<K>(O, x, y, z, out, n);
}

}  // namespace

Kernel avx2_kernel(Op op) noexcept {
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
