#pragma once

#include <dindex/automorphism.hpp>
#include <dindex/exact_solver.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dindex {

/// ceil(Δ^(1/δ)) + 1, via the least t with t^δ >= Δ. Throws for δ < 2.
int paper_bound(int min_degree, int max_degree);

/// ceil(Δ^((δ-1)/δ)) - 1: the number of spokes at the root sharing a label.
int spoke_block_size(int min_degree, int max_degree);

/// Least t with t^k >= x (integer k-th root, rounded up).
int ceil_root(std::int64_t x, int k);

struct TuplePool {
    int labels = 0;                         // r
    std::vector<std::vector<int>> tuples;   // non-decreasing j-tuples over 1..r
};

/// r = min{ r : C(j+r-1, r-1) >= count } and the first `count` multisets of
/// size j over 1..r in lexicographic order.
TuplePool multiset_tuple_pool(int arity, int count);

/// Binomial coefficient saturating at int64 max.
std::int64_t binomial(int n, int k);

enum class GadgetKind { none, single_triangle, friendship };

std::string_view gadget_kind_name(GadgetKind k);

/// Triangles hanging off `hub` whose two other vertices have degree 2.
struct PendantGadget {
    GadgetKind kind = GadgetKind::none;
    Vertex hub = 0;
    std::vector<std::pair<Vertex, Vertex>> triangles;

    std::vector<Vertex> vertices() const;  // non-hub vertices
};

PendantGadget find_pendant_gadget(const Graph& g, Vertex hub);

struct GadgetLabeling {
    /// Labels on gadget edges with local names 0..labels-1; 0 plays the role
    /// of the root marker and is remapped by the caller.
    std::vector<std::pair<Edge, int>> assignments;
    int labels = 0;
};

/// Distinct (spoke pair, outer edge) patterns per triangle, spokes of one
/// triangle always distinct. A single triangle gets spokes 0 and 1, outer 2.
GadgetLabeling label_friendship_gadget(const PendantGadget& gadget);

struct HamiltonianSearch {
    std::optional<std::vector<Vertex>> path;
    bool exhausted = false;  // search completed; no path exists when path is empty
    std::uint64_t nodes = 0;
};

HamiltonianSearch find_hamiltonian_path(const Graph& g, std::uint64_t node_budget = 5'000'000);

struct ConstructOptions {
    std::uint64_t seed = 1;
    int repair_attempts = 64;
    SolveOptions fallback;
};

/// A constructed labeling together with the label budget it had to respect.
struct Construction {
    Certificate certificate;
    int budget = 0;
    /// delta-le-5, layered, hamiltonian, or repair.
    std::string route;
    int attempts = 0;
    bool within_budget() const { return certificate.labeling.label_count() <= budget; }
    bool ok() const { return certificate.distinguishing && within_budget(); }
};

/// Labeling with at most ceil(Δ^(1/δ)) + 1 labels for a connected graph with
/// δ >= 2: small Δ by bounded search, otherwise spoke blocks at a
/// maximum-degree root and layer-by-layer separation.
Construction construct_thm23(const Graph& g, const ConstructOptions& options = {});

/// Two-label labeling of a connected k-regular graph, k >= 5.
Construction construct_thm32(const Graph& g, const ConstructOptions& options = {});

}  // namespace dindex
