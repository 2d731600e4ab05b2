#include <dindex/graph.hpp>

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace dindex {

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_pairs, int vertex_cap)
{
    if (n < 0)
        throw Error("negative vertex count");
    if (n > vertex_cap)
        throw Error("vertex count " + std::to_string(n) + " exceeds cap " + std::to_string(vertex_cap));

    Graph g;
    g.n_ = n;
    g.words_ = (n + 63) / 64;
    g.rows_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    g.adj_.assign(n, {});

    for (auto [a, b] : edge_pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw Error("edge (" + std::to_string(a) + "," + std::to_string(b) + ") has an endpoint outside 0.." +
                        std::to_string(n - 1));
        if (a == b)
            throw Error("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
        g.edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.edge_id_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
        auto [u, v] = g.edges_[i];
        g.rows_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        g.rows_[static_cast<std::size_t>(v) * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        g.edge_id_[static_cast<std::size_t>(u) * n + v] = i;
        g.edge_id_[static_cast<std::size_t>(v) * n + u] = i;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_)
        std::sort(nb.begin(), nb.end());
    return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_pairs)
{
    return build_graph(n, std::span<const std::pair<int, int>>(edge_pairs.begin(), edge_pairs.size()));
}

DegreeStats degree_stats(const Graph& g)
{
    DegreeStats s;
    s.degrees.resize(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        s.degrees[u] = g.degree(u);
    if (g.order() > 0) {
        auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
        s.min_degree = *lo;
        s.max_degree = *hi;
        if (s.min_degree == s.max_degree)
            s.regular_k = s.min_degree;
    }
    return s;
}

BfsLayers bfs_layers(const Graph& g, Vertex root)
{
    if (root < 0 || root >= g.order())
        throw Error("bfs root " + std::to_string(root) + " out of range");
    BfsLayers out;
    out.root = root;
    out.distance.assign(g.order(), -1);
    out.distance[root] = 0;
    out.layers.push_back({root});
    while (true) {
        std::vector<Vertex> next;
        for (Vertex u : out.layers.back())
            for (Vertex w : g.neighbors(u))
                if (out.distance[w] < 0) {
                    out.distance[w] = static_cast<int>(out.layers.size());
                    next.push_back(w);
                }
        if (next.empty())
            break;
        std::sort(next.begin(), next.end());
        out.layers.push_back(std::move(next));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    if (g.order() <= 1)
        return true;
    auto layers = bfs_layers(g, 0);
    return std::none_of(layers.distance.begin(), layers.distance.end(), [](int d) { return d < 0; });
}

int diameter(const Graph& g)
{
    if (! is_connected(g))
        throw Error("diameter of a disconnected graph");
    int best = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        best = std::max(best, bfs_layers(g, u).eccentricity());
    return best;
}

bool is_biconnected(const Graph& g)
{
    int n = g.order();
    if (n < 3 || ! is_connected(g))
        return false;

    // Tarjan low-link from vertex 0; a cut vertex exists iff the root has
    // two DFS children or some child w of u has low[w] >= disc[u].
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    bool cut = false;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (Vertex w : g.neighbors(u)) {
            if (w == parent)
                continue;
            if (disc[w] >= 0) {
                low[u] = std::min(low[u], disc[w]);
                continue;
            }
            ++children;
            dfs(w, u);
            low[u] = std::min(low[u], low[w]);
            if (parent >= 0 && low[w] >= disc[u])
                cut = true;
        }
        if (parent < 0 && children > 1)
            cut = true;
    };
    dfs(0, -1);
    return ! cut;
}

}  // namespace dindex
