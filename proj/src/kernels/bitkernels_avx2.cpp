#include <dindex/bitkernels.hpp>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include <bit>

namespace dindex::kernels {

namespace {

#pragma GCC push_options
#pragma GCC target("avx2,popcnt")

// Per-64-bit-lane popcount via the nibble lookup (vpshufb) and a byte SAD.
inline __m256i popcount_lanes(__m256i v)
{
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t hsum_lanes(__m256i v)
{
    __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s)) + static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

std::uint32_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(x, y)));
    }
    std::uint64_t total = hsum_lanes(acc);
    for (; w < words; ++w)
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[w] & b[w]));
    return static_cast<std::uint32_t>(total);
}

void cell_counts_avx2(const std::uint64_t* row, const std::uint64_t* masks, std::size_t num_masks,
                      std::size_t words, std::uint32_t* out)
{
    if (words == 1) {
        // Single-word rows (n <= 64): four cells per vector against a broadcast row.
        const __m256i r = _mm256_set1_epi64x(static_cast<long long>(row[0]));
        std::size_t c = 0;
        for (; c + 4 <= num_masks; c += 4) {
            __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + c));
            __m256i cnt = popcount_lanes(_mm256_and_si256(r, m));
            alignas(32) std::uint64_t lanes[4];
            _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), cnt);
            out[c] = static_cast<std::uint32_t>(lanes[0]);
            out[c + 1] = static_cast<std::uint32_t>(lanes[1]);
            out[c + 2] = static_cast<std::uint32_t>(lanes[2]);
            out[c + 3] = static_cast<std::uint32_t>(lanes[3]);
        }
        for (; c < num_masks; ++c)
            out[c] = static_cast<std::uint32_t>(_mm_popcnt_u64(row[0] & masks[c]));
        return;
    }
    for (std::size_t c = 0; c < num_masks; ++c)
        out[c] = and_popcount_avx2(row, masks + c * words, words);
}

#pragma GCC pop_options

bool cpu_has_avx2()
{
#if defined(__GNUC__) || defined(__clang__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

constexpr BitKernels kAvx2{Isa::avx2, and_popcount_avx2, cell_counts_avx2};

}  // namespace

const BitKernels* avx2_kernels()
{
    static const bool ok = cpu_has_avx2();
    return ok ? &kAvx2 : nullptr;
}

}  // namespace dindex::kernels

#else

namespace dindex::kernels {
const BitKernels* avx2_kernels() { return nullptr; }
}  // namespace dindex::kernels

#endif
