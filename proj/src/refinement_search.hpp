#pragma once

#include "labeled_graph.hpp"

#include <dindex/automorphism.hpp>

#include <span>
#include <vector>

namespace dindex::detail {

/// Individualization-refinement automorphism search on an edge-labeled,
/// vertex-colored graph.
///
/// The first path of the search tree (always individualizing the smallest
/// vertex of the first non-singleton cell) supplies the base b_0..b_{D-1} and
/// the reference leaf. Walking back up, at depth i every vertex x of the
/// target cell that is not yet in the orbit of b_i is tried: the subtree under
/// x is searched for a leaf whose induced map from the reference leaf is an
/// automorphism. The group order is the product of the b_i orbit lengths over
/// the stabilizer tower.
class RefinementSearch {
public:
    RefinementSearch(const LabeledGraph& lg, std::span<const int> vertex_colors);

    struct Result {
        std::vector<Permutation> generators;
        BigInt order = 1;
    };

    /// With stop_at_first the search returns as soon as one nontrivial
    /// automorphism is known; the order is then meaningless.
    Result run(bool stop_at_first = false);

private:
    struct Coloring {
        std::vector<int> color;
        int cells = 0;
    };

    void refine(Coloring& c) const;
    Coloring individualize(const Coloring& c, Vertex x) const;
    std::vector<int> cell_sizes(const Coloring& c) const;
    std::vector<Vertex> target_cell(const Coloring& c) const;
    bool find_automorphism(const Coloring& c, std::size_t depth, std::vector<Vertex>& out) const;

    const LabeledGraph& lg_;
    int n_;
    Coloring initial_;
    std::vector<Coloring> path_;
    std::vector<std::vector<int>> path_sizes_;
    std::vector<Vertex> ref_vertex_of_color_;

    // scratch for refine
    mutable std::vector<std::uint64_t> masks_;
    mutable std::vector<std::uint32_t> sig_;
    mutable std::vector<int> order_;
};

}  // namespace dindex::detail
