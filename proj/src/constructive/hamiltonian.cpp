#include <dindex/constructive.hpp>

#include <algorithm>

namespace dindex {

HamiltonianSearch find_hamiltonian_path(const Graph& g, std::uint64_t node_budget)
{
    const int n = g.order();
    HamiltonianSearch out;
    if (n == 0) {
        out.exhausted = true;
        return out;
    }
    if (n == 1) {
        out.path = std::vector<Vertex>{0};
        out.exhausted = true;
        return out;
    }

    std::vector<char> visited(n, 0);
    std::vector<Vertex> path;
    bool found = false, out_of_budget = false;

    auto free_degree = [&](Vertex u) {
        int d = 0;
        for (Vertex w : g.neighbors(u))
            d += ! visited[w];
        return d;
    };

    auto extend = [&](auto&& self) -> void {
        if (found || out_of_budget)
            return;
        if (++out.nodes > node_budget) {
            out_of_budget = true;
            return;
        }
        if (static_cast<int>(path.size()) == n) {
            found = true;
            return;
        }
        // Warnsdorff order: fewest onward continuations first.
        std::vector<Vertex> next;
        for (Vertex w : g.neighbors(path.back()))
            if (! visited[w])
                next.push_back(w);
        std::stable_sort(next.begin(), next.end(),
                         [&](Vertex a, Vertex b) { return free_degree(a) < free_degree(b); });
        for (Vertex w : next) {
            visited[w] = 1;
            path.push_back(w);
            self(self);
            if (found || out_of_budget)
                return;
            path.pop_back();
            visited[w] = 0;
        }
    };

    std::vector<Vertex> starts(n);
    for (Vertex u = 0; u < n; ++u)
        starts[u] = u;
    // Low-degree vertices must be endpoints when anything must.
    std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    for (Vertex s : starts) {
        visited[s] = 1;
        path = {s};
        extend(extend);
        if (found) {
            out.path = path;
            out.exhausted = true;
            return out;
        }
        if (out_of_budget)
            return out;
        visited[s] = 0;
    }
    out.exhausted = true;
    return out;
}

}  // namespace dindex
