#include "kernels_internal.hpp"

#if defined(ORDRAM_HAVE_NEON)

#include <arm_neon.h>
#include <bit>

namespace ordram::simd::detail {

namespace {

constexpr std::size_t kLane = 2;

void and_into_neon(Word* dst, const Word* a, const Word* b, std::size_t words)
{
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane) vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < words; ++i) dst[i] = a[i] & b[i];
}

void and_not_inplace_neon(Word* dst, const Word* a, std::size_t words)
{
    std::size_t i = 0;
    // vbicq computes first & ~second
    for (; i + kLane <= words; i += kLane) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(a + i)));
    for (; i < words; ++i) dst[i] &= ~a[i];
}

inline std::uint64_t lane_popcount(uint64x2_t v)
{
    return vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

std::size_t and_popcount_neon(const Word* a, const Word* b, std::size_t words)
{
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane) total += lane_popcount(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool and_any_neon(const Word* a, const Word* b, std::size_t words)
{
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane) {
        const uint64x2_t x = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if ((vgetq_lane_u64(x, 0) | vgetq_lane_u64(x, 1)) != 0) return true;
    }
    for (; i < words; ++i)
        if ((a[i] & b[i]) != 0) return true;
    return false;
}

std::size_t popcount_neon(const Word* a, std::size_t words)
{
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane) total += lane_popcount(vld1q_u64(a + i));
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

}  // namespace

const KernelTable kNeonTable{
    "neon", and_into_neon, and_not_inplace_neon, and_popcount_neon, and_any_neon, popcount_neon,
};

}  // namespace ordram::simd::detail

#endif
