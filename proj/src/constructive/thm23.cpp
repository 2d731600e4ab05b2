#include <dindex/constructive.hpp>

#include "layered.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

namespace dindex {

namespace {

using detail::LayeredState;

bool is_k4_or_k33(const Graph& g, const DegreeStats& ds)
{
    if (g.order() == 4 && g.size() == 6)
        return true;
    if (g.order() != 6 || ds.regular_k != 3)
        return false;
    // 3-regular on 6 vertices: K_{3,3} is the bipartite one (no triangle).
    for (auto [u, v] : g.edges())
        for (Vertex w : g.neighbors(u))
            if (w != v && g.adjacent(v, w))
                return false;
    return true;
}

/// One layered attempt. Returns nullopt when the spoke blocks cannot cover
/// the root's neighbourhood or the gadget overruns the budget.
std::optional<std::vector<int>> layered_attempt(const Graph& g, const DegreeStats& ds, Vertex root,
                                                std::uint64_t seed, bool randomize)
{
    const int delta = ds.min_degree;
    const int t = ceil_root(ds.max_degree, delta);
    const int big = t + 1;  // stands in for the root marker label
    const int block = spoke_block_size(delta, ds.max_degree);

    LayeredState s(g, root, t, [&] {
        std::vector<int> p(t);
        std::iota(p.begin(), p.end(), 1);
        return p;
    }(), 1, seed, randomize);

    const auto& n1 = s.bfs.layers.at(1);
    std::vector<char> in_gadget(g.order(), 0);

    auto gadget = find_pendant_gadget(g, root);
    if (gadget.kind != GadgetKind::none) {
        auto gl = label_friendship_gadget(gadget);
        if (gl.labels - 1 > t)
            return std::nullopt;
        for (auto [e, local] : gl.assignments) {
            int idx = g.edge_index(e.u, e.v);
            s.labels[idx] = local == 0 ? big : local;
            s.locked[idx] = 1;
        }
        for (Vertex x : gadget.vertices())
            in_gadget[x] = 1;
    }

    std::vector<Vertex> rest;
    for (Vertex x : n1)
        if (! in_gadget[x])
            rest.push_back(x);
    if (randomize)
        std::shuffle(rest.begin(), rest.end(), s.rng);
    if (block < 1 || static_cast<long long>(rest.size()) > static_cast<long long>(t + 1) * block)
        return std::nullopt;

    // Block 0 takes the marker label, block i takes label i.
    std::vector<int> block_of(g.order(), -1);
    for (std::size_t k = 0; k < rest.size(); ++k) {
        Vertex x = rest[k];
        int b = static_cast<int>(k) / block;
        block_of[x] = b;
        int idx = g.edge_index(root, x);
        s.labels[idx] = b == 0 ? big : b;
        s.locked[idx] = 1;
    }

    // Identification classes inside N1: (block, has N2 neighbours, j).
    std::map<std::tuple<int, int, int>, int> class_ids;
    std::vector<std::vector<Vertex>> tuple_members;  // Case 2, per class
    std::vector<Vertex> by_count;                    // M1 and Case 1
    std::vector<int> j_of(g.order(), 0);
    for (Vertex x : rest) {
        int j = 0;
        for (Vertex w : g.neighbors(x))
            j += s.layer(w) == 2;
        j_of[x] = j;
        auto key = std::make_tuple(block_of[x], j > 0 ? 1 : 0, j);
        auto [it, fresh] = class_ids.emplace(key, static_cast<int>(class_ids.size()));
        s.ident_class[x] = it->second;
        if (j > 0 && j >= delta - 1) {
            if (fresh || static_cast<int>(tuple_members.size()) <= it->second)
                tuple_members.resize(class_ids.size());
            tuple_members[it->second].push_back(x);
        }
        else
            by_count.push_back(x);
    }

    // Case 2: distinct multisets on the N2 edges, within t labels.
    for (auto& members : tuple_members) {
        if (members.empty())
            continue;
        const int j = j_of[members.front()];
        auto pool = multiset_tuple_pool(j, static_cast<int>(members.size()));
        if (pool.labels > t)
            return std::nullopt;
        for (std::size_t k = 0; k < members.size(); ++k) {
            Vertex x = members[k];
            std::vector<Vertex> down;
            for (Vertex w : g.neighbors(x))
                if (s.layer(w) == 2)
                    down.push_back(w);
            for (std::size_t c = 0; c < down.size(); ++c)
                s.label_of(x, down[c]) = pool.tuples[k][c];
        }
    }

    // M1 and Case 1: distinct label-count vectors over the free incident edges.
    std::map<int, std::vector<std::vector<int>>> taken;
    for (Vertex x : by_count) {
        std::vector<int> edges;
        for (Vertex w : g.neighbors(x))
            if (w != root)
                edges.push_back(g.edge_index(x, w));
        detail::assign_distinct_counts(s, x, edges, taken[s.ident_class[x]]);
    }

    for (Vertex x : n1)
        for (Vertex w : g.neighbors(x))
            if (s.layer(w) == 1 && s.label_of(x, w) == 0)
                s.label_of(x, w) = 1;

    detail::propagate_layers(s);
    return s.labels;
}

}  // namespace

Construction construct_thm23(const Graph& g, const ConstructOptions& options)
{
    if (g.order() < 2 || ! is_connected(g))
        throw Error("construct_thm23 needs a connected graph");
    const auto ds = degree_stats(g);
    if (ds.min_degree < 2)
        throw Error("construct_thm23 needs minimum degree >= 2");
    const int budget = paper_bound(ds.min_degree, ds.max_degree);

    Construction best;
    best.budget = budget;
    best.certificate.seed = options.seed;

    if (ds.max_degree <= 5) {
        int cap = budget;
        if (ds.max_degree >= 3)
            cap = std::min(budget, is_k4_or_k33(g, ds) ? ds.max_degree : ds.max_degree - 1);
        auto opts = options.fallback;
        opts.seed = options.seed;
        auto found = find_distinguishing_labeling(g, cap, opts);
        best.attempts = 1;
        if (found.outcome == SearchOutcome::found) {
            best.certificate = is_distinguishing(g, *found.labeling, Method::exact_search);
            best.certificate.seed = options.seed;
            best.route = "delta-le-5";
            return best;
        }
        best.route = "delta-le-5";
        if (cap < budget)
            return detail::finish(g, best, budget, options, Method::repair);
        return detail::with_fallback_certificate(g, std::move(best), options.seed);
    }

    std::vector<Vertex> roots;
    for (Vertex u = 0; u < g.order(); ++u)
        if (g.degree(u) == ds.max_degree)
            roots.push_back(u);

    best.route = "layered";
    bool have = false;
    std::mt19937_64 rng(options.seed);
    for (int attempt = 0; attempt <= options.repair_attempts; ++attempt) {
        const bool randomize = attempt > 0;
        Vertex root = roots.front();
        if (randomize)
            root = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];
        best.attempts = attempt + 1;
        auto labels = layered_attempt(g, ds, root, options.seed + attempt, randomize);
        if (! labels)
            continue;
        EdgeLabeling lab{std::move(*labels)};
        auto cert = is_distinguishing(g, lab, attempt == 0 ? Method::theorem_2_3 : Method::repair);
        cert.seed = options.seed;
        cert.root = root;
        const bool fits = lab.label_count() <= budget;
        if (! have || (cert.distinguishing && fits))
            best.certificate = cert;
        have = true;
        if (cert.distinguishing && fits) {
            best.route = attempt == 0 ? "layered" : "repair";
            return best;
        }
    }
    return detail::finish(g, best, budget, options, Method::repair);
}

}  // namespace dindex
