#pragma once

#include <dindex/exact_solver.hpp>
#include <dindex/graph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace dindex {

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
/// Sides {0..p-1} and {p..p+q-1}.
Graph gen_complete_bipartite(int p, int q);
/// Hub 0; triangle i uses vertices 2i+1, 2i+2.
Graph gen_friendship(int n);
Graph gen_petersen();
Graph gen_circulant(int n, std::span<const int> offsets);
/// Pairing model: shuffle n*k points, pair neighbours, reject loops,
/// multi-edges and disconnected results. Throws after max_attempts.
Graph gen_random_regular(int n, int k, std::uint64_t seed, int max_attempts = 10'000);

int formula_path(int n);
int formula_cycle(int n);
/// Ceiling of the real root of t^3 - t^2 - 2n, i.e. the least d with
/// d^3 - d^2 >= 2n. Exact integer arithmetic.
int formula_friendship(std::int64_t n);

enum class BipartiteCase {
    low,       // q <= r^p - ceil(log_r p) - 1  -> r
    high,      // q >= r^p - ceil(log_r p) + 1  -> r + 1
    boundary,  // q == r^p - ceil(log_r p)      -> r or r + 1
    balanced,  // p == q: the sides can be swapped, the p < q rule does not apply
    star,      // p == 1: every edge needs its own label
};

std::string_view bipartite_case_name(BipartiteCase c);

struct BipartiteFormulaResult {
    BipartiteCase kind = BipartiteCase::low;
    int r = 0;
    int lo = 0;
    std::optional<int> hi;  // absent when no upper bound is claimed
    bool resolved_exactly = false;

    bool exact() const { return hi && *hi == lo; }
};

/// Requires 1 <= p <= q with some r >= 2 such that (r-1)^p < q <= r^p.
/// The boundary and balanced cases are settled with the exact solver when
/// p*q <= exact_cap; otherwise the honest interval (or lower bound) is returned.
BipartiteFormulaResult formula_complete_bipartite(int p, int q, int exact_cap = 12,
                                                  const SolveOptions& options = {});

/// Smallest e with r^e >= p.
int ceil_log(int r, std::int64_t p);

}  // namespace dindex
