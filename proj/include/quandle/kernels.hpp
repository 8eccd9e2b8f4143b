#pragma once

// Data-parallel inner loops over element vectors.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2 variant compiled with a function-level target attribute. The variant
// is chosen once at runtime from CPUID; setting QUANDLE_SIMD=scalar in the
// environment forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace quandle::kernels {

using Index = std::int32_t;

struct KernelSet {
    std::string_view name;

    // state[i] = column[state[i]]
    void (*gather_inplace)(std::span<const Index> column, std::span<Index> state);

    // out[i] = column[in[i]]
    void (*gather)(std::span<const Index> column, std::span<const Index> in, std::span<Index> out);

    // Smallest i with state[i] != i, or state.size() if state is the identity.
    std::size_t (*first_non_fixed)(std::span<const Index> state);

    // Smallest i with a[i] != b[i], or a.size().
    std::size_t (*first_mismatch)(std::span<const Index> a, std::span<const Index> b);
};

const KernelSet& scalar_kernels();

// Null when the build or the CPU has no AVX2.
const KernelSet* avx2_kernels();

// The set used by the library.
const KernelSet& active();

}  // namespace quandle::kernels
