#pragma once

// Word-parallel kernels over adjacency rows.
//
// Every graph in this project stores one 64-bit row per vertex, so the inner
// loops of refinement, cut search and common-neighbourhood extraction are
// short loops over at most 64 words. Each kernel has a portable scalar
// reference implementation and, on x86-64, an AVX2 variant chosen at runtime.
// The two are required to agree bit for bit (see tests/unit/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <span>

namespace turanlab::simd {

struct KernelTable {
    const char* name;

    // Sum of popcount(rows[i]).
    std::uint64_t (*popcount_sum)(const std::uint64_t* rows, std::size_t count);

    // AND of rows[i] over every i whose bit is set in `select`. The empty
    // selection yields all ones. Requires count <= 64.
    std::uint64_t (*and_selected)(const std::uint64_t* rows, std::size_t count,
                                  std::uint64_t select);

    // out[i] = popcount(rows[i] & mask).
    void (*masked_popcounts)(const std::uint64_t* rows, std::size_t count,
                             std::uint64_t mask, std::uint8_t* out);

    // out[i] = ~rows[i] restricted to {0..count-1} minus bit i. Requires count <= 64.
    void (*complement_rows)(const std::uint64_t* rows, std::size_t count,
                            std::uint64_t* out);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// The table used by the library. Chosen once: AVX2 when available unless the
// environment variable TURANLAB_FORCE_SCALAR is set to a non-empty value.
const KernelTable& active_kernels();

inline std::uint64_t popcount_sum(std::span<const std::uint64_t> rows) {
    return active_kernels().popcount_sum(rows.data(), rows.size());
}

inline std::uint64_t and_selected(std::span<const std::uint64_t> rows, std::uint64_t select) {
    return active_kernels().and_selected(rows.data(), rows.size(), select);
}

inline void masked_popcounts(std::span<const std::uint64_t> rows, std::uint64_t mask,
                             std::span<std::uint8_t> out) {
    active_kernels().masked_popcounts(rows.data(), rows.size(), mask, out.data());
}

inline void complement_rows(std::span<const std::uint64_t> rows, std::span<std::uint64_t> out) {
    active_kernels().complement_rows(rows.data(), rows.size(), out.data());
}

}  // namespace turanlab::simd
