#include <dindex/bitkernels.hpp>

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

namespace dindex::kernels {

namespace {

std::uint32_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t words)
{
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t w = 0;
    for (; w + 2 <= words; w += 2) {
        uint8x16_t x = vreinterpretq_u8_u64(vandq_u64(vld1q_u64(a + w), vld1q_u64(b + w)));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(x)))));
    }
    std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; w < words; ++w)
        total += static_cast<std::uint64_t>(__builtin_popcountll(a[w] & b[w]));
    return static_cast<std::uint32_t>(total);
}

void cell_counts_neon(const std::uint64_t* row, const std::uint64_t* masks, std::size_t num_masks,
                      std::size_t words, std::uint32_t* out)
{
    if (words == 1) {
        const uint64x2_t r = vdupq_n_u64(row[0]);
        std::size_t c = 0;
        for (; c + 2 <= num_masks; c += 2) {
            uint8x16_t x = vreinterpretq_u8_u64(vandq_u64(r, vld1q_u64(masks + c)));
            uint64x2_t cnt = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(x))));
            out[c] = static_cast<std::uint32_t>(vgetq_lane_u64(cnt, 0));
            out[c + 1] = static_cast<std::uint32_t>(vgetq_lane_u64(cnt, 1));
        }
        for (; c < num_masks; ++c)
            out[c] = static_cast<std::uint32_t>(__builtin_popcountll(row[0] & masks[c]));
        return;
    }
    for (std::size_t c = 0; c < num_masks; ++c)
        out[c] = and_popcount_neon(row, masks + c * words, words);
}

constexpr BitKernels kNeon{Isa::neon, and_popcount_neon, cell_counts_neon};

}  // namespace

const BitKernels* neon_kernels() { return &kNeon; }

}  // namespace dindex::kernels

#else

namespace dindex::kernels {
const BitKernels* neon_kernels() { return nullptr; }
}  // namespace dindex::kernels

#endif
