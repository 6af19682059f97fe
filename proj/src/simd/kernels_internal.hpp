#pragma once

#include "ordram/simd.hpp"

namespace ordram::simd::detail {

extern const KernelTable kScalarTable;

#if defined(ORDRAM_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

#if defined(ORDRAM_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif

}  // namespace ordram::simd::detail
