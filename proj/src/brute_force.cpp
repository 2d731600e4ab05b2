#include <dindex/exact_solver.hpp>

#include "exhaustive_scan.hpp"

#include <algorithm>
#include <numeric>

namespace dindex {

namespace {

/// Calls visit(labels) for every restricted growth string of length m with
/// exactly d distinct values 1..d; stops when visit returns true.
bool for_each_labeling(int m, int d, std::vector<int>& labels, int pos, int used,
                       const std::function<bool(const std::vector<int>&)>& visit)
{
    if (pos == m)
        return used == d && visit(labels);
    for (int l = 1; l <= std::min(d, used + 1); ++l) {
        int now = std::max(used, l);
        if (m - pos - 1 < d - now)
            continue;
        labels[pos] = l;
        if (for_each_labeling(m, d, labels, pos + 1, now, visit))
            return true;
    }
    return false;
}

}  // namespace

std::optional<int> brute_force_index(const Graph& g, const BruteForceLimits& limits)
{
    const int m = g.size();
    const int n = g.order();
    if (m > limits.max_edges)
        throw Error("brute force limited to " + std::to_string(limits.max_edges) + " edges, graph has " +
                    std::to_string(m));

    // Every nontrivial automorphism, as an induced permutation of edge indices.
    struct EdgeAction {
        int support;
        std::vector<std::uint8_t> image;
    };
    std::vector<EdgeAction> actions;
    bool overflow = false;
    detail::scan_automorphisms(g, [&](std::span<const Vertex> p) {
        int support = 0;
        for (int u = 0; u < n; ++u)
            support += p[u] != u;
        if (support == 0)
            return true;
        if (actions.size() >= limits.max_group) {
            overflow = true;
            return false;
        }
        EdgeAction a{support, std::vector<std::uint8_t>(m)};
        for (int e = 0; e < m; ++e)
            a.image[e] = static_cast<std::uint8_t>(g.edge_index(p[g.edges()[e].u], p[g.edges()[e].v]));
        actions.push_back(std::move(a));
        return true;
    });
    if (overflow)
        throw Error("brute force limited to groups of order " + std::to_string(limits.max_group));
    if (actions.empty())
        return 1;

    // Small-support automorphisms refute most labelings, so test them first.
    std::stable_sort(actions.begin(), actions.end(),
                     [](const EdgeAction& a, const EdgeAction& b) { return a.support < b.support; });

    auto distinguishing = [&](const std::vector<int>& labels) {
        for (const auto& a : actions) {
            bool preserved = true;
            for (int e = 0; e < m && preserved; ++e)
                preserved = labels[a.image[e]] == labels[e];
            if (preserved)
                return false;
        }
        return true;
    };

    std::vector<int> labels(m);
    for (int d = 1; d <= m; ++d)
        if (for_each_labeling(m, d, labels, 0, 0, distinguishing))
            return d;
    return std::nullopt;
}

}  // namespace dindex
