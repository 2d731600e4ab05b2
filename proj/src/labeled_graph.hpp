#pragma once

#include <dindex/graph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace dindex::detail {

/// Edge-labeled view of a Graph with one adjacency bit row per (label, vertex).
/// Labels are compacted to 0..num_labels-1 preserving their order.
class LabeledGraph {
public:
    explicit LabeledGraph(const Graph& g);
    LabeledGraph(const Graph& g, std::span<const int> edge_labels);

    const Graph& graph() const { return *g_; }
    int order() const { return g_->order(); }
    int words() const { return g_->words_per_row(); }
    int num_labels() const { return num_labels_; }

    const std::uint64_t* row(int label, Vertex u) const
    {
        return rows_.data() + (static_cast<std::size_t>(label) * order() + u) * words();
    }
    /// Compact label of edge {u,v}, -1 if not adjacent.
    int label(Vertex u, Vertex v) const
    {
        int e = g_->edge_index(u, v);
        return e < 0 ? -1 : compact_[e];
    }

    /// True iff p maps every edge onto an edge with the same label.
    bool preserved_by(std::span<const Vertex> p) const;

private:
    void build_rows();

    const Graph* g_;
    int num_labels_ = 1;
    std::vector<int> compact_;
    std::vector<std::uint64_t> rows_;
};

}  // namespace dindex::detail
