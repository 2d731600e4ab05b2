#pragma once

#include <dindex/automorphism.hpp>
#include <dindex/constructive.hpp>
#include <dindex/graph.hpp>

#include <random>
#include <span>
#include <vector>

namespace dindex::detail {

/// Working state of a layer-by-layer labeling around a fixed root.
///
/// After the root and its first layer are pinned down, every deeper layer is
/// split into classes of vertices sharing the same neighbours one layer up.
/// Members of a class are told apart by the labels on their edges to those
/// shared neighbours (their "word"); when words run out the separation falls
/// back to edges further out.
struct LayeredState {
    LayeredState(const Graph& g, Vertex root, int word_labels, std::vector<int> preference, int fill,
                 std::uint64_t seed, bool randomize);

    const Graph& g;
    BfsLayers bfs;
    std::vector<int> labels;  // 0 = unlabeled
    std::vector<char> locked;
    /// Vertices sharing a class id >= 0 must keep pairwise distinct layered keys.
    std::vector<int> ident_class;
    int word_labels;
    std::vector<int> preference;
    int fill;
    std::mt19937_64 rng;
    bool randomize;
    /// Layers whose fixedness check failed after all corrective actions.
    std::vector<int> failed_layers;

    int layer(Vertex u) const { return bfs.distance[u]; }
    int& label_of(Vertex u, Vertex v) { return labels[g.edge_index(u, v)]; }

    std::vector<int> filled() const;
    /// Per-label counts on edges to the previous, same and next layer.
    std::vector<int> layered_key(Vertex x) const;
    bool identities_hold() const;
    /// Members of `among` that some label-preserving automorphism moves,
    /// with unlabeled edges read as the fill label.
    std::vector<Vertex> unfixed(std::span<const Vertex> among) const;
};

/// Step-2 separation for every layer pair (i, i+1), i >= 1, followed by the
/// fill of any leftover edges.
void propagate_layers(LayeredState& s);

/// Assigns labels to the unlabeled edges of `edges` from a multiset chosen so
/// that the count vector of `x` differs from every vector in `taken`.
/// Returns false (leaving the first candidate applied) when none works.
bool assign_distinct_counts(LayeredState& s, Vertex x, std::span<const int> edges,
                            std::vector<std::vector<int>>& taken);

std::vector<int> count_vector(const LayeredState& s, Vertex x);

/// Gives `best` a certificate for the all-1 labeling if it has none yet.
Construction with_fallback_certificate(const Graph& g, Construction best, std::uint64_t seed);

/// Last resort: bounded search for any distinguishing labeling within
/// `budget` labels; keeps `best` if the search comes back empty.
Construction finish(const Graph& g, Construction best, int budget, const ConstructOptions& options,
                    Method fallback_method);

}  // namespace dindex::detail
