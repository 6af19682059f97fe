#include "kernels_internal.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace ordram::simd {

namespace {

bool cpu_has_avx2()
{
#if defined(ORDRAM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable& pick_default()
{
    if (const char* forced = std::getenv("ORDRAM_SIMD"); forced != nullptr && std::string_view(forced) == "scalar")
        return detail::kScalarTable;
#if defined(ORDRAM_HAVE_AVX2)
    if (cpu_has_avx2()) return detail::kAvx2Table;
#endif
#if defined(ORDRAM_HAVE_NEON)
    return detail::kNeonTable;
#endif
    return detail::kScalarTable;
}

std::atomic<const KernelTable*>& active_slot()
{
    static std::atomic<const KernelTable*> slot{&pick_default()};
    return slot;
}

}  // namespace

const KernelTable& scalar_kernels() { return detail::kScalarTable; }

std::vector<const KernelTable*> available_kernels()
{
    std::vector<const KernelTable*> out{&detail::kScalarTable};
#if defined(ORDRAM_HAVE_AVX2)
    if (cpu_has_avx2()) out.push_back(&detail::kAvx2Table);
#endif
#if defined(ORDRAM_HAVE_NEON)
    out.push_back(&detail::kNeonTable);
#endif
    return out;
}

const KernelTable& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

void set_active_kernels(const KernelTable& table) { active_slot().store(&table, std::memory_order_release); }

}  // namespace ordram::simd
