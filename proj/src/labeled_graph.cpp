#include "labeled_graph.hpp"

#include <algorithm>

namespace dindex::detail {

LabeledGraph::LabeledGraph(const Graph& g) : g_(&g), num_labels_(1), compact_(g.size(), 0)
{
    build_rows();
}

LabeledGraph::LabeledGraph(const Graph& g, std::span<const int> edge_labels) : g_(&g)
{
    if (static_cast<int>(edge_labels.size()) != g.size())
        throw Error("labeling has " + std::to_string(edge_labels.size()) + " entries for " +
                    std::to_string(g.size()) + " edges");
    std::vector<int> distinct(edge_labels.begin(), edge_labels.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    num_labels_ = std::max<int>(1, static_cast<int>(distinct.size()));
    compact_.resize(edge_labels.size());
    for (std::size_t e = 0; e < edge_labels.size(); ++e)
        compact_[e] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), edge_labels[e]) -
                                       distinct.begin());
    build_rows();
}

void LabeledGraph::build_rows()
{
    int n = order(), w = words();
    rows_.assign(static_cast<std::size_t>(num_labels_) * n * w, 0);
    const auto& edges = g_->edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        std::size_t base = static_cast<std::size_t>(compact_[e]) * n;
        rows_[(base + u) * w + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        rows_[(base + v) * w + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
}

bool LabeledGraph::preserved_by(std::span<const Vertex> p) const
{
    const auto& edges = g_->edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        int f = g_->edge_index(p[edges[e].u], p[edges[e].v]);
        if (f < 0 || compact_[f] != compact_[e])
            return false;
    }
    return true;
}

}  // namespace dindex::detail
