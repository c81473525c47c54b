// Reference kernels: a plain loop over the templated closed forms.

#include "geodiff/geom/batch.hpp"
#include "geodiff/geom/formulas.hpp"

namespace geodiff::geom::batch::detail {
namespace {

template <double (*F)(double, double, double)>
void loop3(const double* x, const double* y, const double* z, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = F(x[i], y[i], z[i]);
}

void hypot_loop(const double* x, const double* y, const double*, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = formulas::hypotenuse(x[i], y[i]);
}

}  // namespace

Kernel scalar_kernel(Op op) noexcept {
  switch (op) {
    case Op::Hypotenuse: return hypot_loop;
    case Op::Median: return loop3<formulas::median<double>>;
    case Op::TriangleArea: return loop3<formulas::triangle_area<double>>;
    case Op::BisectorFull: return loop3<formulas::bisector_full<double>>;
    case Op::BisectorToIncenter: return loop3<formulas::bisector_to_incenter<double>>;
    case Op::Circumradius: return loop3<formulas::circumradius<double>>;
    case Op::Inradius: return loop3<formulas::inradius<double>>;
  }
  return nullptr;
}

}  // namespace geodiff::geom::batch::detail
