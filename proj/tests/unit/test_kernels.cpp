#include <dindex/automorphism.hpp>
#include <dindex/bitkernels.hpp>
#include <dindex/families.hpp>

#include <doctest.h>

#include <bit>
#include <random>

using namespace dindex;
using namespace dindex::kernels;

namespace {

std::vector<const BitKernels*> available()
{
    std::vector<const BitKernels*> out{&scalar_kernels()};
    if (auto* k = avx2_kernels())
        out.push_back(k);
    if (auto* k = neon_kernels())
        out.push_back(k);
    return out;
}

// Restores the default kernels when a test pins another variant.
struct IsaGuard {
    Isa saved = active().isa;
    ~IsaGuard() { force_isa(saved); }
};

}  // namespace

TEST_CASE("scalar kernels against a direct popcount")
{
    const auto& k = scalar_kernels();
    std::uint64_t a[3] = {0xFFULL, 0, ~0ULL};
    std::uint64_t b[3] = {0x0FULL, 1, 0xF0F0F0F0F0F0F0F0ULL};
    CHECK(k.and_popcount(a, b, 3) == 4 + 32);
    CHECK(k.and_popcount(a, b, 0) == 0);
}

TEST_CASE("SIMD kernels match the scalar reference")
{
    std::mt19937_64 rng(2024);
    const auto& ref = scalar_kernels();
    for (const auto* k : available()) {
        CAPTURE(isa_name(k->isa));
        for (std::size_t words : {1, 2, 3, 4, 5, 8, 9}) {
            for (std::size_t masks : {1, 2, 3, 4, 5, 7, 8, 17}) {
                std::vector<std::uint64_t> row(words), mask(words * masks);
                for (auto& w : row)
                    w = rng();
                for (auto& w : mask)
                    w = rng() & rng();
                CHECK(k->and_popcount(row.data(), mask.data(), words) ==
                      ref.and_popcount(row.data(), mask.data(), words));
                std::vector<std::uint32_t> got(masks), want(masks);
                k->cell_counts(row.data(), mask.data(), masks, words, got.data());
                for (std::size_t c = 0; c < masks; ++c) {
                    std::uint32_t direct = 0;
                    for (std::size_t w = 0; w < words; ++w)
                        direct += std::popcount(row[w] & mask[c * words + w]);
                    want[c] = direct;
                }
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("force_isa and isa names")
{
    IsaGuard guard;
    CHECK(force_isa(Isa::scalar));
    CHECK(active().isa == Isa::scalar);
    CHECK(isa_name(Isa::scalar) == "scalar");
    CHECK(isa_name(Isa::avx2) == "avx2");
    CHECK(isa_name(Isa::neon) == "neon");
    if (! avx2_kernels())
        CHECK_FALSE(force_isa(Isa::avx2));
    CHECK(kernels_for(Isa::scalar) == &scalar_kernels());
}

TEST_CASE("automorphism orders do not depend on the kernel variant")
{
    IsaGuard guard;
    std::vector<Graph> graphs{gen_petersen(), gen_cycle(9), gen_complete_bipartite(3, 4), gen_friendship(3)};
    std::vector<BigInt> orders;
    for (const auto* k : available()) {
        REQUIRE(force_isa(k->isa));
        std::vector<BigInt> got;
        for (const auto& g : graphs)
            got.push_back(automorphism_group_refinement(g).order);
        if (orders.empty())
            orders = got;
        CHECK(got == orders);
    }
    CHECK(orders == std::vector<BigInt>{120, 18, 144, 48});
}
