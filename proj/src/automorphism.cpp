#include <dindex/automorphism.hpp>

#include "exhaustive_scan.hpp"
#include "labeled_graph.hpp"
#include "refinement_search.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace dindex {

Permutation Permutation::identity(int n)
{
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

bool Permutation::is_identity() const
{
    for (int u = 0; u < size(); ++u)
        if (images[u] != u)
            return false;
    return true;
}

bool Permutation::is_bijection() const
{
    std::vector<char> hit(images.size(), 0);
    for (Vertex y : images) {
        if (y < 0 || y >= size() || hit[y])
            return false;
        hit[y] = 1;
    }
    return true;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    Permutation out;
    out.images.resize(b.images.size());
    for (std::size_t u = 0; u < b.images.size(); ++u)
        out.images[u] = a.images[b.images[u]];
    return out;
}

Permutation Permutation::inverse() const
{
    Permutation out;
    out.images.resize(images.size());
    for (int u = 0; u < size(); ++u)
        out.images[images[u]] = u;
    return out;
}

int EdgeLabeling::label_count() const
{
    std::vector<int> used;
    for (int l : labels)
        if (l > 0)
            used.push_back(l);
    std::sort(used.begin(), used.end());
    return static_cast<int>(std::unique(used.begin(), used.end()) - used.begin());
}

bool EdgeLabeling::complete() const
{
    return std::all_of(labels.begin(), labels.end(), [](int l) { return l > 0; });
}

std::string_view method_name(Method m)
{
    switch (m) {
    case Method::exact_search: return "exact-search";
    case Method::theorem_2_3: return "theorem-2.3";
    case Method::theorem_3_2: return "theorem-3.2";
    case Method::family_formula: return "family-formula";
    case Method::repair: return "repair";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name)
{
    for (auto m : {Method::exact_search, Method::theorem_2_3, Method::theorem_3_2, Method::family_formula,
                   Method::repair})
        if (method_name(m) == name)
            return m;
    return std::nullopt;
}

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<Vertex>& v) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (Vertex x : v)
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        return h;
    }
};

}  // namespace

std::vector<Permutation> enumerate_automorphisms(const Graph& g, std::size_t cap)
{
    std::vector<Permutation> out;
    bool overflow = false;
    detail::scan_automorphisms(g, [&](std::span<const Vertex> images) {
        if (out.size() == cap) {
            overflow = true;
            return false;
        }
        out.push_back(Permutation{{images.begin(), images.end()}});
        return true;
    });
    if (overflow)
        throw Error("automorphism group exceeds enumeration cap " + std::to_string(cap));
    return out;
}

AutGroup automorphism_group_exhaustive(const Graph& g)
{
    AutGroup group;
    std::unordered_set<std::vector<Vertex>, VectorHash> closure;
    closure.insert(Permutation::identity(g.order()).images);
    std::size_t count = 0;

    detail::scan_automorphisms(g, [&](std::span<const Vertex> images) {
        ++count;
        std::vector<Vertex> p(images.begin(), images.end());
        if (closure.contains(p))
            return true;
        group.generators.push_back(Permutation{p});
        // Regrow the closure under the enlarged generating set.
        std::deque<std::vector<Vertex>> queue(closure.begin(), closure.end());
        while (! queue.empty()) {
            auto e = std::move(queue.front());
            queue.pop_front();
            for (const auto& gen : group.generators) {
                std::vector<Vertex> prod(e.size());
                for (std::size_t u = 0; u < e.size(); ++u)
                    prod[u] = gen.images[e[u]];
                if (closure.insert(prod).second)
                    queue.push_back(std::move(prod));
            }
        }
        return true;
    });
    group.order = count;
    return group;
}

AutGroup automorphism_group_refinement(const Graph& g)
{
    detail::LabeledGraph lg(g);
    detail::RefinementSearch search(lg, {});
    auto r = search.run();
    return AutGroup{std::move(r.generators), r.order};
}

AutGroup automorphism_group(const Graph& g, const AutConfig& config)
{
    if (g.order() <= config.brute_force_cap)
        return automorphism_group_exhaustive(g);
    return automorphism_group_refinement(g);
}

AutGroup labeled_automorphism_group(const Graph& g, std::span<const int> edge_labels,
                                    std::span<const int> vertex_colors)
{
    if (! vertex_colors.empty() && static_cast<int>(vertex_colors.size()) != g.order())
        throw Error("vertex color vector length mismatch");
    detail::LabeledGraph lg(g, edge_labels);
    detail::RefinementSearch search(lg, vertex_colors);
    auto r = search.run();
    return AutGroup{std::move(r.generators), r.order};
}

bool is_automorphism(const Graph& g, const Permutation& p)
{
    if (p.size() != g.order())
        throw Error("permutation length " + std::to_string(p.size()) + " does not match order " +
                    std::to_string(g.order()));
    if (! p.is_bijection())
        return false;
    for (auto [u, v] : g.edges())
        if (! g.adjacent(p(u), p(v)))
            return false;
    return true;
}

bool preserves_labeling(const Graph& g, const EdgeLabeling& labeling, const Permutation& p)
{
    if (! is_automorphism(g, p))
        return false;
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (labeling.labels[g.edge_index(p(edges[e].u), p(edges[e].v))] != labeling.labels[e])
            return false;
    return true;
}

Certificate is_distinguishing(const Graph& g, const EdgeLabeling& labeling, Method method)
{
    if (static_cast<int>(labeling.labels.size()) != g.size() || ! labeling.complete())
        throw Error("labeling does not assign a positive label to every edge");
    detail::LabeledGraph lg(g, labeling.labels);
    detail::RefinementSearch search(lg, {});
    auto r = search.run(true);

    Certificate cert;
    cert.labeling = labeling;
    cert.method = method;
    cert.distinguishing = r.generators.empty();
    if (! cert.distinguishing)
        cert.witness = std::move(r.generators.front());
    return cert;
}

bool verify_certificate(const Graph& g, const Certificate& cert)
{
    if (static_cast<int>(cert.labeling.labels.size()) != g.size() || ! cert.labeling.complete())
        return false;
    if (cert.distinguishing) {
        if (cert.witness)
            return false;
        return is_distinguishing(g, cert.labeling).distinguishing;
    }
    if (! cert.witness || cert.witness->size() != g.order() || cert.witness->is_identity())
        return false;
    return preserves_labeling(g, cert.labeling, *cert.witness);
}

std::vector<int> vertex_orbit_ids(int n, std::span<const Permutation> generators)
{
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : generators)
        for (int u = 0; u < n; ++u) {
            int a = find(u), b = find(p(u));
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> ids(n);
    for (int u = 0; u < n; ++u)
        ids[u] = find(u);
    return ids;
}

std::vector<std::vector<int>> edge_orbits(const Graph& g, const AutGroup& group)
{
    const int m = g.size();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    const auto& edges = g.edges();
    for (const auto& p : group.generators)
        for (int e = 0; e < m; ++e) {
            int f = g.edge_index(p(edges[e].u), p(edges[e].v));
            int a = find(e), b = find(f);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> orbits;
    std::vector<int> slot(m, -1);
    for (int e = 0; e < m; ++e) {
        int r = find(e);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(orbits.size());
            orbits.emplace_back();
        }
        orbits[slot[r]].push_back(e);
    }
    return orbits;
}

}  // namespace dindex
