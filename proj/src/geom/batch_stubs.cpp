// Null entries for SIMD variants that the target cannot compile.

#include "geodiff/geom/batch.hpp"

namespace geodiff::geom::batch::detail {

#ifndef GEODIFF_HAVE_AVX2
Kernel avx2_kernel(Op) noexcept { return nullptr; }
#endif

#ifndef GEODIFF_HAVE_NEON
Kernel neon_kernel(Op) noexcept { return nullptr; }
#endif

}  // namespace geodiff::geom::batch::detail
