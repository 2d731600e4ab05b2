#include "exhaustive_scan.hpp"

#include <vector>

namespace dindex::detail {

void scan_automorphisms(const Graph& g, const std::function<bool(std::span<const Vertex>)>& visit)
{
    const int n = g.order();
    std::vector<Vertex> images(n, -1);
    std::vector<char> used(n, 0);
    bool stop = false;

    auto consistent = [&](Vertex u, Vertex y) {
        if (g.degree(u) != g.degree(y))
            return false;
        for (Vertex w = 0; w < u; ++w)
            if (g.adjacent(u, w) != g.adjacent(y, images[w]))
                return false;
        return true;
    };

    auto extend = [&](auto&& self, Vertex u) -> void {
        if (u == n) {
            stop = ! visit(images);
            return;
        }
        for (Vertex y = 0; y < n && ! stop; ++y) {
            if (used[y] || ! consistent(u, y))
                continue;
            used[y] = 1;
            images[u] = y;
            self(self, u + 1);
            used[y] = 0;
        }
    };
    extend(extend, 0);
}

}  // namespace dindex::detail
