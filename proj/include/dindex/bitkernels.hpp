#pragma once

// Bit-row kernels used by color refinement: intersect a vertex's adjacency
// row with cell masks and count the survivors. A scalar reference is always
// available; SIMD variants are picked at startup from what the CPU reports.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace dindex::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct BitKernels {
    Isa isa;
    /// popcount(a & b) over `words` 64-bit words.
    std::uint32_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    /// out[c] = popcount(row & masks[c]) for c < num_masks; masks are laid
    /// out mask-major, `words` words each.
    void (*cell_counts)(const std::uint64_t* row, const std::uint64_t* masks, std::size_t num_masks,
                        std::size_t words, std::uint32_t* out);
};

const BitKernels& scalar_kernels();
/// nullptr when the variant was not compiled in or the CPU lacks the feature.
const BitKernels* avx2_kernels();
const BitKernels* neon_kernels();

const BitKernels* kernels_for(Isa isa);

/// Kernels in use by the library. Defaults to the widest supported ISA.
const BitKernels& active();
/// Pins the active variant; returns false (and changes nothing) if unsupported.
bool force_isa(Isa isa);

}  // namespace dindex::kernels
