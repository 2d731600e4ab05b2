#include <dindex/constructive.hpp>

#include "layered.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace dindex {

namespace {

using detail::LayeredState;

constexpr std::uint64_t kStepNodeCap = 200'000;

bool root_palette_unique(const Graph& g, const std::vector<int>& labels, Vertex root)
{
    for (Vertex u = 0; u < g.order(); ++u) {
        bool all_one = true;
        for (Vertex w : g.neighbors(u))
            all_one = all_one && labels[g.edge_index(u, w)] == 1;
        if (all_one != (u == root))
            return false;
    }
    return true;
}

/// Hamiltonian-path labelings: path edges 1 and the rest 2, then single
/// flips of a path edge or a chord. First distinguishing candidate wins.
std::optional<EdgeLabeling> hamiltonian_labeling(const Graph& g, const std::vector<Vertex>& path)
{
    std::vector<int> base(g.size(), 2);
    std::vector<int> on_path;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int e = g.edge_index(path[i], path[i + 1]);
        base[e] = 1;
        on_path.push_back(e);
    }
    auto accept = [&](const std::vector<int>& labels) {
        EdgeLabeling lab{labels};
        return is_distinguishing(g, lab, Method::theorem_3_2).distinguishing;
    };
    if (accept(base))
        return EdgeLabeling{base};
    for (int e : on_path) {
        auto c = base;
        c[e] = 2;
        if (accept(c))
            return EdgeLabeling{c};
    }
    for (int e = 0; e < g.size(); ++e) {
        if (base[e] != 2)
            continue;
        auto c = base;
        c[e] = 1;
        if (accept(c))
            return EdgeLabeling{c};
    }
    return std::nullopt;
}

/// Step 1 around `root`: spokes 1, and labels on every other edge touching
/// N1 so that each N1 vertex carries a 2 and all N1 vertices have pairwise
/// distinct layered keys. Backtracking over those edges.
bool step_one(LayeredState& s, Vertex root)
{
    const Graph& g = s.g;
    const auto& n1 = s.bfs.layers.at(1);
    for (Vertex x : n1) {
        int e = g.edge_index(root, x);
        s.labels[e] = 1;
        s.locked[e] = 1;
        s.ident_class[x] = 0;
    }

    std::vector<Vertex> order(n1.begin(), n1.end());
    if (s.randomize)
        std::shuffle(order.begin(), order.end(), s.rng);

    // Edges to decide, grouped by the N1 vertex that closes them.
    std::vector<int> edges;
    std::vector<int> closes_at;  // index into order after which a vertex is complete
    std::vector<char> seen(g.size(), 0);
    std::vector<std::vector<Vertex>> complete_after;
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (Vertex w : g.neighbors(order[k])) {
            int e = g.edge_index(order[k], w);
            if (w == root || seen[e])
                continue;
            seen[e] = 1;
            edges.push_back(e);
        }
        closes_at.push_back(static_cast<int>(edges.size()));
    }

    std::vector<std::vector<int>> keys;
    std::uint64_t nodes = 0;
    auto has_two = [&](Vertex x) {
        for (Vertex w : g.neighbors(x))
            if (s.labels[g.edge_index(x, w)] == 2)
                return true;
        return false;
    };

    // Vertex k is complete once edges[0 .. closes_at[k]) are labeled.
    auto rec = [&](auto&& self, std::size_t pos, std::size_t next_check) -> bool {
        while (next_check < order.size() && static_cast<std::size_t>(closes_at[next_check]) <= pos) {
            Vertex x = order[next_check];
            if (! has_two(x))
                return false;
            auto key = s.layered_key(x);
            if (std::find(keys.begin(), keys.end(), key) != keys.end())
                return false;
            keys.push_back(key);
            bool ok = self(self, pos, next_check + 1);
            keys.pop_back();
            return ok;
        }
        if (pos == edges.size())
            return true;
        if (++nodes > kStepNodeCap)
            return false;
        int first = 2, second = 1;
        if (s.randomize && (s.rng() & 1U))
            std::swap(first, second);
        for (int l : {first, second}) {
            s.labels[edges[pos]] = l;
            if (self(self, pos + 1, next_check))
                return true;
        }
        s.labels[edges[pos]] = 0;
        return false;
    };
    return rec(rec, 0, 0);
}

std::optional<std::vector<int>> step_attempt(const Graph& g, Vertex root, std::uint64_t seed, bool randomize)
{
    LayeredState s(g, root, 2, {2, 1}, 2, seed, randomize);
    if (! step_one(s, root))
        return std::nullopt;
    detail::propagate_layers(s);
    // Nobody but the root may end up with only 1s around it.
    for (Vertex u = 0; u < g.order(); ++u) {
        if (u == root)
            continue;
        bool all_one = true;
        for (Vertex w : g.neighbors(u))
            all_one = all_one && s.label_of(u, w) == 1;
        if (all_one)
            for (Vertex w : g.neighbors(u))
                if (w != root && s.layer(w) != 1) {
                    s.label_of(u, w) = 2;
                    break;
                }
    }
    return s.labels;
}

}  // namespace

Construction construct_thm32(const Graph& g, const ConstructOptions& options)
{
    if (g.order() < 2 || ! is_connected(g))
        throw Error("construct_thm32 needs a connected graph");
    const auto ds = degree_stats(g);
    if (! ds.regular_k || *ds.regular_k < 5)
        throw Error("construct_thm32 needs a k-regular graph with k >= 5");
    const int k = *ds.regular_k;
    const int n = g.order();

    Construction best;
    best.budget = 2;
    best.certificate.seed = options.seed;

    if (2 * k >= n - 1) {
        best.route = "hamiltonian";
        auto ham = find_hamiltonian_path(g);
        best.attempts = 1;
        if (ham.path) {
            if (auto lab = hamiltonian_labeling(g, *ham.path)) {
                best.certificate = is_distinguishing(g, *lab, Method::theorem_3_2);
                best.certificate.seed = options.seed;
                return best;
            }
        }
        return detail::finish(g, best, 2, options, Method::repair);
    }

    best.route = "layered";
    bool have = false;
    std::mt19937_64 rng(options.seed);
    for (int attempt = 0; attempt <= options.repair_attempts; ++attempt) {
        const bool randomize = attempt > 0;
        Vertex root = randomize ? std::uniform_int_distribution<Vertex>(0, n - 1)(rng) : 0;
        best.attempts = attempt + 1;
        auto labels = step_attempt(g, root, options.seed + attempt, randomize);
        if (! labels)
            continue;
        const bool unique = root_palette_unique(g, *labels, root);
        EdgeLabeling lab{std::move(*labels)};
        auto cert = is_distinguishing(g, lab, attempt == 0 ? Method::theorem_3_2 : Method::repair);
        cert.seed = options.seed;
        cert.root = root;
        const bool good = cert.distinguishing && unique && lab.label_count() <= 2;
        if (! have || good)
            best.certificate = cert;
        have = true;
        if (good) {
            best.route = attempt == 0 ? "layered" : "repair";
            return best;
        }
    }
    return detail::finish(g, best, 2, options, Method::repair);
}

}  // namespace dindex
