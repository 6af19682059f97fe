#pragma once

// Word-parallel bit-row kernels.
//
// Every kernel has a scalar reference implementation; AVX2 (x86-64) and NEON
// (aarch64) variants are compiled when the toolchain supports them and picked
// at runtime from the host CPU features. All variants must agree bit-for-bit
// with the scalar reference.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ordram::simd {

using Word = std::uint64_t;

struct KernelTable {
    std::string_view name;
    // dst[i] = a[i] & b[i]
    void (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t words);
    // dst[i] &= ~a[i]
    void (*and_not_inplace)(Word* dst, const Word* a, std::size_t words);
    // popcount(a & b)
    std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
    // (a & b) != 0
    bool (*and_any)(const Word* a, const Word* b, std::size_t words);
    // popcount(a)
    std::size_t (*popcount)(const Word* a, std::size_t words);
};

const KernelTable& scalar_kernels();

/// Kernel tables usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

/// The table in use. Chosen once, on first call: the widest variant the CPU
/// supports, unless ORDRAM_SIMD=scalar is set in the environment.
const KernelTable& active_kernels();

/// Overrides the active table (tests and benchmarks).
void set_active_kernels(const KernelTable& table);

}  // namespace ordram::simd
