#pragma once

// Batched evaluation of the square-root-of-polynomial theorems over
// structure-of-arrays triangle data. A scalar reference kernel set is always
// built; AVX2 (x86-64) and NEON (AArch64) variants are compiled when the
// target supports them and chosen at runtime.
//
// Inputs must already satisfy the Triangle invariants (build the arrays from
// validated Triangle objects); the kernels do no validation.

#include <span>
#include <string_view>
#include <vector>

#include "geodiff/geom/types.hpp"

namespace geodiff::geom::batch {

enum class Op {
  Hypotenuse,  // uses x, y only
  Median,
  TriangleArea,
  BisectorFull,
  BisectorToIncenter,
  Circumradius,
  Inradius,
};

inline constexpr Op kAllOps[] = {Op::Hypotenuse,         Op::Median,       Op::TriangleArea, Op::BisectorFull,
                                 Op::BisectorToIncenter, Op::Circumradius, Op::Inradius};

std::string_view op_name(Op op) noexcept;

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

/// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Widest available variant.
Isa best_isa() noexcept;

struct TriangleSoA {
  std::vector<double> x, y, z;

  TriangleSoA() = default;
  explicit TriangleSoA(std::span<const Triangle> triangles);
  std::size_t size() const noexcept { return x.size(); }
};

/// out[i] = op(x[i], y[i], z[i]). All spans must have equal length.
/// Throws ErrorKind::Domain on a length mismatch or an unavailable isa.
void evaluate(Op op, std::span<const double> x, std::span<const double> y, std::span<const double> z,
              std::span<double> out, Isa isa);

inline void evaluate(Op op, const TriangleSoA& t, std::span<double> out, Isa isa = best_isa()) {
  evaluate(op, t.x, t.y, t.z, out, isa);
}

namespace detail {
using Kernel = void (*)(const double* x, const double* y, const double* z, double* out, std::size_t n);
Kernel scalar_kernel(Op op) noexcept;
Kernel avx2_kernel(Op op) noexcept;  // nullptr when not compiled in
Kernel neon_kernel(Op op) noexcept;  // nullptr when not compiled in
}  // namespace detail

}  // namespace geodiff::geom::batch
