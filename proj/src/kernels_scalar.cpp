#include "quandle/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace quandle::kernels {
namespace {

void gather_inplace_scalar(std::span<const Index> column, std::span<Index> state) {
    for (auto& v : state) v = column[static_cast<std::size_t>(v)];
}

void gather_scalar(std::span<const Index> column, std::span<const Index> in, std::span<Index> out) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = column[static_cast<std::size_t>(in[i])];
}

std::size_t first_non_fixed_scalar(std::span<const Index> state) {
    for (std::size_t i = 0; i < state.size(); ++i)
        if (state[i] != static_cast<Index>(i)) return i;
    return state.size();
}

std::size_t first_mismatch_scalar(std::span<const Index> a, std::span<const Index> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return i;
    return a.size();
}

const KernelSet* choose() {
    const char* forced = std::getenv("QUANDLE_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return &scalar_kernels();
    if (const KernelSet* k = avx2_kernels()) return k;
    return &scalar_kernels();
}

}  // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet set{"scalar", gather_inplace_scalar, gather_scalar, first_non_fixed_scalar,
                               first_mismatch_scalar};
    return set;
}

const KernelSet& active() {
    static const KernelSet* chosen = choose();
    return *chosen;
}

}  // namespace quandle::kernels
