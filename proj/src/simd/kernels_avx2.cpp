#include "turanlab/simd/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define TURANLAB_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

#include <bit>

namespace turanlab::simd {

#ifdef TURANLAB_HAVE_AVX2_KERNELS

namespace {

#define TURANLAB_AVX2 __attribute__((target("avx2,popcnt")))

// Per-lane popcount of four 64-bit words (nibble lookup + byte sums).
TURANLAB_AVX2 inline __m256i popcount_epi64(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                          _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

// All-ones lanes where the matching bit of `bits` (low four) is set.
TURANLAB_AVX2 inline __m256i lane_mask(std::uint64_t bits) {
    const __m256i probe = _mm256_setr_epi64x(1, 2, 4, 8);
    const __m256i b = _mm256_set1_epi64x(static_cast<long long>(bits & 0xf));
    return _mm256_cmpeq_epi64(_mm256_and_si256(b, probe), probe);
}

TURANLAB_AVX2 std::uint64_t popcount_sum_avx2(const std::uint64_t* rows, std::size_t count) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + i));
        acc = _mm256_add_epi64(acc, popcount_epi64(v));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < count; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(rows[i]));
    return total;
}

TURANLAB_AVX2 std::uint64_t and_selected_avx2(const std::uint64_t* rows, std::size_t count,
                                              std::uint64_t select) {
    __m256i acc = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + i));
        const __m256i keep = lane_mask(select >> i);
        // unselected lanes contribute all ones
        acc = _mm256_and_si256(acc, _mm256_or_si256(v, _mm256_xor_si256(keep, _mm256_set1_epi64x(-1))));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t result = lanes[0] & lanes[1] & lanes[2] & lanes[3];
    for (; i < count; ++i)
        if ((select >> i) & 1u) result &= rows[i];
    return result;
}

TURANLAB_AVX2 void masked_popcounts_avx2(const std::uint64_t* rows, std::size_t count,
                                         std::uint64_t mask, std::uint8_t* out) {
    const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
    std::size_t i = 0;
    alignas(32) std::uint64_t lanes[4];
    for (; i + 4 <= count; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + i));
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), popcount_epi64(_mm256_and_si256(v, m)));
        out[i] = static_cast<std::uint8_t>(lanes[0]);
        out[i + 1] = static_cast<std::uint8_t>(lanes[1]);
        out[i + 2] = static_cast<std::uint8_t>(lanes[2]);
        out[i + 3] = static_cast<std::uint8_t>(lanes[3]);
    }
    for (; i < count; ++i) out[i] = static_cast<std::uint8_t>(_mm_popcnt_u64(rows[i] & mask));
}

TURANLAB_AVX2 void complement_rows_avx2(const std::uint64_t* rows, std::size_t count,
                                        std::uint64_t* out) {
    const std::uint64_t full = count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
    const __m256i f = _mm256_set1_epi64x(static_cast<long long>(full));
    const __m256i one = _mm256_set1_epi64x(1);
    __m256i index = _mm256_setr_epi64x(0, 1, 2, 3);
    const __m256i step = _mm256_set1_epi64x(4);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + i));
        const __m256i diag = _mm256_sllv_epi64(one, index);
        // ~v & full & ~diag == full & ~(v | diag)
        const __m256i r = _mm256_andnot_si256(_mm256_or_si256(v, diag), f);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
        index = _mm256_add_epi64(index, step);
    }
    for (; i < count; ++i) out[i] = ~rows[i] & full & ~(std::uint64_t{1} << i);
}

#undef TURANLAB_AVX2

constexpr KernelTable kAvx2{
    "avx2",
    popcount_sum_avx2,
    and_selected_avx2,
    masked_popcounts_avx2,
    complement_rows_avx2,
};

}  // namespace

const KernelTable* avx2_kernels() {
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    }();
    return supported ? &kAvx2 : nullptr;
}

#else

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace turanlab::simd
