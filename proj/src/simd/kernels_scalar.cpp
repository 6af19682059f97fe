#include "kernels_internal.hpp"

#include <bit>

namespace ordram::simd::detail {

namespace {

void and_into_scalar(Word* dst, const Word* a, const Word* b, std::size_t words)
{
    for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & b[i];
}

void and_not_inplace_scalar(Word* dst, const Word* a, std::size_t words)
{
    for (std::size_t i = 0; i < words; ++i) dst[i] &= ~a[i];
}

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t words)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool and_any_scalar(const Word* a, const Word* b, std::size_t words)
{
    for (std::size_t i = 0; i < words; ++i)
        if ((a[i] & b[i]) != 0) return true;
    return false;
}

std::size_t popcount_scalar(const Word* a, std::size_t words)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

}  // namespace

const KernelTable kScalarTable{
    "scalar", and_into_scalar, and_not_inplace_scalar, and_popcount_scalar, and_any_scalar, popcount_scalar,
};

}  // namespace ordram::simd::detail
