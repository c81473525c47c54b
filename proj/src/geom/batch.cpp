#include "geodiff/geom/batch.hpp"

#include "geodiff/error.hpp"

namespace geodiff::geom::batch {

std::string_view op_name(Op op) noexcept {
  switch (op) {
    case Op::Hypotenuse: return "hypotenuse";
    case Op::Median: return "median";
    case Op::TriangleArea: return "triangle_area";
    case Op::BisectorFull: return "bisector_full";
    case Op::BisectorToIncenter: return "bisector_to_incenter";
    case Op::Circumradius: return "circumradius";
    case Op::Inradius: return "inradius";
  }
  return "unknown";
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return detail::avx2_kernel(Op::Median) != nullptr && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
      // Advanced SIMD is mandatory on AArch64.
      return detail::neon_kernel(Op::Median) != nullptr;
  }
  return false;
}

Isa best_isa() noexcept {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

TriangleSoA::TriangleSoA(std::span<const Triangle> triangles) {
  x.reserve(triangles.size());
  y.reserve(triangles.size());
  z.reserve(triangles.size());
  for (const auto& t : triangles) {
    x.push_back(t.x());
    y.push_back(t.y());
    z.push_back(t.z());
  }
}

void evaluate(Op op, std::span<const double> x, std::span<const double> y, std::span<const double> z,
              std::span<double> out, Isa isa) {
  if (x.size() != out.size() || y.size() != out.size() || (op != Op::Hypotenuse && z.size() != out.size())) {
    throw Error(ErrorKind::Domain, "batch input and output lengths differ");
  }
  if (!isa_available(isa)) throw Error(ErrorKind::Domain, "instruction set not available: " + std::string(isa_name(isa)));

  detail::Kernel kernel = nullptr;
  switch (isa) {
    case Isa::Scalar: kernel = detail::scalar_kernel(op); break;
    case Isa::Avx2: kernel = detail::avx2_kernel(op); break;
    case Isa::Neon: kernel = detail::neon_kernel(op); break;
  }
  kernel(x.data(), y.data(), op == Op::Hypotenuse ? nullptr : z.data(), out.data(), out.size());
}

}  // namespace geodiff::geom::batch
