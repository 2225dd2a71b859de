#include "turanlab/simd/kernels.hpp"

#include <bit>
#include <cstdlib>

namespace turanlab::simd {

namespace {

std::uint64_t popcount_sum_scalar(const std::uint64_t* rows, std::size_t count) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < count; ++i) total += std::popcount(rows[i]);
    return total;
}

std::uint64_t and_selected_scalar(const std::uint64_t* rows, std::size_t count,
                                  std::uint64_t select) {
    std::uint64_t acc = ~std::uint64_t{0};
    for (std::size_t i = 0; i < count; ++i)
        if ((select >> i) & 1u) acc &= rows[i];
    return acc;
}

void masked_popcounts_scalar(const std::uint64_t* rows, std::size_t count, std::uint64_t mask,
                             std::uint8_t* out) {
    for (std::size_t i = 0; i < count; ++i)
        out[i] = static_cast<std::uint8_t>(std::popcount(rows[i] & mask));
}

void complement_rows_scalar(const std::uint64_t* rows, std::size_t count, std::uint64_t* out) {
    const std::uint64_t full = count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
    for (std::size_t i = 0; i < count; ++i)
        out[i] = ~rows[i] & full & ~(std::uint64_t{1} << i);
}

constexpr KernelTable kScalar{
    "scalar",
    popcount_sum_scalar,
    and_selected_scalar,
    masked_popcounts_scalar,
    complement_rows_scalar,
};

const KernelTable& choose() {
    const char* force = std::getenv("TURANLAB_FORCE_SCALAR");
    if (force != nullptr && *force != '\0') return kScalar;
    if (const KernelTable* fast = avx2_kernels()) return *fast;
    return kScalar;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable& active_kernels() {
    static const KernelTable& table = choose();
    return table;
}

}  // namespace turanlab::simd
