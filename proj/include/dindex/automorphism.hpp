#pragma once

#include <dindex/graph.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dindex {

using BigInt = boost::multiprecision::cpp_int;

/// Vertex permutation; images[u] is where u goes.
struct Permutation {
    std::vector<Vertex> images;

    static Permutation identity(int n);
    int size() const { return static_cast<int>(images.size()); }
    bool is_identity() const;
    bool is_bijection() const;
    Vertex operator()(Vertex u) const { return images[u]; }
    /// (a * b)(u) = a(b(u)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

struct AutGroup {
    std::vector<Permutation> generators;  // never contains the identity
    BigInt order = 1;
};

/// Labels indexed by canonical edge index (Graph::edges()). 0 means unlabeled.
struct EdgeLabeling {
    std::vector<int> labels;

    /// Number of distinct labels actually used.
    int label_count() const;
    bool complete() const;
    friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

enum class Method { exact_search, theorem_2_3, theorem_3_2, family_formula, repair };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct Certificate {
    EdgeLabeling labeling;
    bool distinguishing = false;
    std::optional<Permutation> witness;
    Method method = Method::exact_search;
    std::optional<std::uint64_t> seed;
    std::optional<Vertex> root;
};

struct AutConfig {
    int brute_force_cap = 8;
    std::size_t enumeration_cap = 1'000'000;
};

/// Exhaustive permutation scan below brute_force_cap, refinement above it.
AutGroup automorphism_group(const Graph& g, const AutConfig& config = {});
AutGroup automorphism_group_exhaustive(const Graph& g);
AutGroup automorphism_group_refinement(const Graph& g);

/// Automorphism group of g where edge labels (and optional vertex colors)
/// must be preserved. Refinement engine only.
AutGroup labeled_automorphism_group(const Graph& g, std::span<const int> edge_labels,
                                    std::span<const int> vertex_colors = {});

/// Every automorphism of g including the identity, by backtracking scan.
/// Throws Error if more than `cap` exist.
std::vector<Permutation> enumerate_automorphisms(const Graph& g, std::size_t cap = 1'000'000);

bool is_automorphism(const Graph& g, const Permutation& p);
bool preserves_labeling(const Graph& g, const EdgeLabeling& labeling, const Permutation& p);

/// Decides whether only the identity preserves the labeling, by searching the
/// edge-labeled graph directly. Throws Error if an edge is unlabeled.
Certificate is_distinguishing(const Graph& g, const EdgeLabeling& labeling, Method method = Method::exact_search);

/// Re-derives the verdict of a certificate from scratch; false on any
/// inconsistency (bad witness, stale verdict, incomplete labeling).
bool verify_certificate(const Graph& g, const Certificate& cert);

std::vector<int> vertex_orbit_ids(int n, std::span<const Permutation> generators);
/// Edge orbits as lists of canonical edge indices, each sorted, ordered by
/// their smallest member.
std::vector<std::vector<int>> edge_orbits(const Graph& g, const AutGroup& group);

}  // namespace dindex
