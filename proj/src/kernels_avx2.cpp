#include "quandle/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define QUANDLE_HAVE_X86 1
#include <immintrin.h>
#else
#define QUANDLE_HAVE_X86 0
#endif

namespace quandle::kernels {

#if QUANDLE_HAVE_X86
namespace {

#define QUANDLE_AVX2 __attribute__((target("avx2")))

QUANDLE_AVX2 void gather_inplace_avx2(std::span<const Index> column, std::span<Index> state) {
    const std::size_t n = state.size();
    const int* base = column.data();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        auto* p = reinterpret_cast<__m256i*>(state.data() + i);
        const __m256i idx = _mm256_loadu_si256(p);
        _mm256_storeu_si256(p, _mm256_i32gather_epi32(base, idx, 4));
    }
    for (; i < n; ++i) state[i] = column[static_cast<std::size_t>(state[i])];
}

QUANDLE_AVX2 void gather_avx2(std::span<const Index> column, std::span<const Index> in, std::span<Index> out) {
    const std::size_t n = in.size();
    const int* base = column.data();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_i32gather_epi32(base, idx, 4));
    }
    for (; i < n; ++i) out[i] = column[static_cast<std::size_t>(in[i])];
}

QUANDLE_AVX2 std::size_t first_non_fixed_avx2(std::span<const Index> state) {
    const std::size_t n = state.size();
    __m256i expect = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i step = _mm256_set1_epi32(8);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(state.data() + i));
        const int eq = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, expect)));
        if (eq != 0xff) return i + static_cast<std::size_t>(__builtin_ctz(~eq & 0xff));
        expect = _mm256_add_epi32(expect, step);
    }
    for (; i < n; ++i)
        if (state[i] != static_cast<Index>(i)) return i;
    return n;
}

QUANDLE_AVX2 std::size_t first_mismatch_avx2(std::span<const Index> a, std::span<const Index> b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
        const int eq = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb)));
        if (eq != 0xff) return i + static_cast<std::size_t>(__builtin_ctz(~eq & 0xff));
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return i;
    return n;
}

#undef QUANDLE_AVX2

}  // namespace

const KernelSet* avx2_kernels() {
    static const KernelSet set{"avx2", gather_inplace_avx2, gather_avx2, first_non_fixed_avx2,
                               first_mismatch_avx2};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &set : nullptr;
}

#else

const KernelSet* avx2_kernels() { return nullptr; }

#endif

}  // namespace quandle::kernels
