// Built with -mavx2; only reached through the dispatcher after a CPU check.

#include "kernels_internal.hpp"

#include <bit>
#include <immintrin.h>

namespace ordram::simd::detail {

namespace {

constexpr std::size_t kLane = 4;  // 64-bit words per __m256i

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Nibble-table popcount, summed per 64-bit lane.
inline __m256i popcount_lanes(__m256i v)
{
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                           0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc)
{
    alignas(32) Word lanes[kLane];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

void and_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t words)
{
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
    for (; i < words; ++i) dst[i] = a[i] & b[i];
}

void and_not_inplace_avx2(Word* dst, const Word* a, std::size_t words)
{
    std::size_t i = 0;
    // andnot computes ~first & second
    for (; i + kLane <= words; i += kLane) store(dst + i, _mm256_andnot_si256(load(a + i), load(dst + i)));
    for (; i < words; ++i) dst[i] &= ~a[i];
}

std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t words)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane)
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
    std::size_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool and_any_avx2(const Word* a, const Word* b, std::size_t words)
{
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane) {
        const __m256i x = _mm256_and_si256(load(a + i), load(b + i));
        if (!_mm256_testz_si256(x, x)) return true;
    }
    for (; i < words; ++i)
        if ((a[i] & b[i]) != 0) return true;
    return false;
}

std::size_t popcount_avx2(const Word* a, std::size_t words)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
    std::size_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

}  // namespace

const KernelTable kAvx2Table{
    "avx2", and_into_avx2, and_not_inplace_avx2, and_popcount_avx2, and_any_avx2, popcount_avx2,
};

}  // namespace ordram::simd::detail
