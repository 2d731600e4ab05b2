#include <dindex/bitkernels.hpp>

#include <atomic>
#include <bit>

namespace dindex::kernels {

namespace {

std::uint32_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words)
{
    std::uint32_t total = 0;
    for (std::size_t w = 0; w < words; ++w)
        total += static_cast<std::uint32_t>(std::popcount(a[w] & b[w]));
    return total;
}

void cell_counts_scalar(const std::uint64_t* row, const std::uint64_t* masks, std::size_t num_masks,
                        std::size_t words, std::uint32_t* out)
{
    for (std::size_t c = 0; c < num_masks; ++c)
        out[c] = and_popcount_scalar(row, masks + c * words, words);
}

constexpr BitKernels kScalar{Isa::scalar, and_popcount_scalar, cell_counts_scalar};

const BitKernels* best_available()
{
    if (auto* k = avx2_kernels())
        return k;
    if (auto* k = neon_kernels())
        return k;
    return &kScalar;
}

std::atomic<const BitKernels*>& active_slot()
{
    static std::atomic<const BitKernels*> slot{best_available()};
    return slot;
}

}  // namespace

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

const BitKernels& scalar_kernels() { return kScalar; }

const BitKernels* kernels_for(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return &kScalar;
    case Isa::avx2: return avx2_kernels();
    case Isa::neon: return neon_kernels();
    }
    return nullptr;
}

const BitKernels& active() { return *active_slot().load(std::memory_order_relaxed); }

bool force_isa(Isa isa)
{
    auto* k = kernels_for(isa);
    if (! k)
        return false;
    active_slot().store(k, std::memory_order_relaxed);
    return true;
}

}  // namespace dindex::kernels
