#include <dindex/families.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace dindex {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

// r^p saturating at int64 max.
std::int64_t sat_pow(std::int64_t r, int p)
{
    std::int64_t out = 1;
    for (int i = 0; i < p; ++i) {
        if (out > std::numeric_limits<std::int64_t>::max() / r)
            return std::numeric_limits<std::int64_t>::max();
        out *= r;
    }
    return out;
}

}  // namespace

Graph gen_path(int n)
{
    if (n < 1)
        throw Error("path needs n >= 1");
    Pairs e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph gen_cycle(int n)
{
    if (n < 3)
        throw Error("cycle needs n >= 3");
    Pairs e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

Graph gen_complete(int n)
{
    if (n < 1)
        throw Error("complete graph needs n >= 1");
    Pairs e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph gen_complete_bipartite(int p, int q)
{
    if (p < 1 || q < 1)
        throw Error("complete bipartite graph needs p, q >= 1");
    Pairs e;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            e.emplace_back(i, p + j);
    return build_graph(p + q, e);
}

Graph gen_friendship(int n)
{
    if (n < 1)
        throw Error("friendship graph needs n >= 1");
    Pairs e;
    for (int i = 0; i < n; ++i) {
        int a = 2 * i + 1, b = 2 * i + 2;
        e.insert(e.end(), {{0, a}, {0, b}, {a, b}});
    }
    return build_graph(2 * n + 1, e);
}

Graph gen_petersen()
{
    Pairs e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return build_graph(10, e);
}

Graph gen_circulant(int n, std::span<const int> offsets)
{
    Pairs e;
    for (int i = 0; i < n; ++i)
        for (int s : offsets) {
            if (s % n == 0)
                throw Error("circulant offset " + std::to_string(s) + " is a multiple of n");
            e.emplace_back(i, ((i + s) % n + n) % n);
        }
    return build_graph(n, e);
}

Graph gen_random_regular(int n, int k, std::uint64_t seed, int max_attempts)
{
    if (k < 0 || n < 1 || k >= n || (static_cast<long>(n) * k) % 2 != 0)
        throw Error("no simple " + std::to_string(k) + "-regular graph on " + std::to_string(n) + " vertices");
    std::mt19937_64 rng(seed);
    std::vector<int> points(static_cast<std::size_t>(n) * k);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = 0; i < points.size(); ++i)
            points[i] = static_cast<int>(i) / k;
        std::shuffle(points.begin(), points.end(), rng);
        Pairs e;
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            int a = points[i], b = points[i + 1];
            if (a == b) {
                simple = false;
                break;
            }
            auto key = std::minmax(a, b);
            if (std::find(e.begin(), e.end(), std::pair<int, int>(key.first, key.second)) != e.end())
                simple = false;
            else
                e.emplace_back(key.first, key.second);
        }
        if (! simple)
            continue;
        Graph g = build_graph(n, e);
        if (is_connected(g))
            return g;
    }
    throw Error("pairing model found no simple connected graph in " + std::to_string(max_attempts) + " attempts");
}

int formula_path(int n)
{
    if (n < 3)
        throw Error("path formula needs n >= 3");
    return 2;
}

int formula_cycle(int n)
{
    if (n < 3)
        throw Error("cycle formula needs n >= 3");
    return n <= 5 ? 3 : 2;
}

int formula_friendship(std::int64_t n)
{
    if (n < 2)
        throw Error("friendship formula needs n >= 2");
    std::int64_t d = 1;
    while (d * d * d - d * d < 2 * n)
        ++d;
    return static_cast<int>(d);
}

std::string_view bipartite_case_name(BipartiteCase c)
{
    switch (c) {
    case BipartiteCase::low: return "low";
    case BipartiteCase::high: return "high";
    case BipartiteCase::boundary: return "boundary";
    case BipartiteCase::balanced: return "balanced";
    case BipartiteCase::star: return "star";
    }
    return "unknown";
}

int ceil_log(int r, std::int64_t p)
{
    int e = 0;
    std::int64_t pw = 1;
    while (pw < p) {
        pw = pw > std::numeric_limits<std::int64_t>::max() / r ? std::numeric_limits<std::int64_t>::max() : pw * r;
        ++e;
    }
    return e;
}

BipartiteFormulaResult formula_complete_bipartite(int p, int q, int exact_cap, const SolveOptions& options)
{
    if (p < 1 || q < p)
        throw Error("complete bipartite formula needs 1 <= p <= q");
    if (q < 2)
        throw Error("no r >= 2 with (r-1)^p < q <= r^p for q = 1");

    int r = 2;
    while (sat_pow(r, p) < q)
        ++r;

    BipartiteFormulaResult out;
    out.r = r;
    if (p == 1) {
        // K_{1,q}: any two equally labeled edges are swapped by a leaf transposition.
        out.kind = BipartiteCase::star;
        out.lo = q;
        out.hi = q;
        return out;
    }

    std::int64_t threshold = sat_pow(r, p) - ceil_log(r, p);
    if (q <= threshold - 1) {
        out.kind = BipartiteCase::low;
        out.lo = r;
        out.hi = r;
    }
    else if (q >= threshold + 1) {
        out.kind = BipartiteCase::high;
        out.lo = r + 1;
        out.hi = r + 1;
    }
    else {
        out.kind = BipartiteCase::boundary;
        out.lo = r;
        out.hi = r + 1;
    }

    if (p == q) {
        // The side swap is an extra symmetry; the side-preserving value is
        // only a lower bound.
        out.kind = BipartiteCase::balanced;
        out.hi.reset();
    }

    if (! out.exact() && static_cast<long>(p) * q <= exact_cap) {
        auto solved = exact_distinguishing_index(gen_complete_bipartite(p, q), options);
        if (solved.status == SolveStatus::solved) {
            out.lo = solved.dprime;
            out.hi = solved.dprime;
            out.resolved_exactly = true;
        }
    }
    return out;
}

}  // namespace dindex
