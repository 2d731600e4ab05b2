#include <dindex/constructive.hpp>
#include <dindex/families.hpp>

#include "corpus.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace dindex;

namespace {

Graph triangle_on_hexagon()
{
    // C_6 on 0..5 with a triangle 0,6,7 hanging at vertex 0.
    return build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {0, 7}, {6, 7}});
}

bool only_root_all_ones(const Graph& g, const EdgeLabeling& lab, Vertex root)
{
    for (Vertex u = 0; u < g.order(); ++u) {
        bool all_one = true;
        for (Vertex w : g.neighbors(u))
            all_one = all_one && lab.labels[g.edge_index(u, w)] == 1;
        if (all_one != (u == root))
            return false;
    }
    return true;
}

Graph random_min_degree_graph(int n, double p, std::mt19937_64& rng)
{
    for (;;) {
        std::bernoulli_distribution coin(p);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    pairs.emplace_back(u, v);
        Graph g = build_graph(n, pairs);
        if (is_connected(g) && degree_stats(g).min_degree >= 2)
            return g;
    }
}

}  // namespace

TEST_CASE("paper_bound and block size use exact roots")
{
    CHECK(paper_bound(2, 6) == 4);
    CHECK(paper_bound(3, 8) == 3);
    CHECK(paper_bound(3, 9) == 4);
    CHECK(paper_bound(2, 2) == 3);
    CHECK_THROWS_AS(paper_bound(1, 4), Error);
    CHECK(ceil_root(8, 3) == 2);
    CHECK(ceil_root(9, 3) == 3);
    CHECK(ceil_root(1, 5) == 1);
    CHECK(ceil_root(std::int64_t{1} << 62, 2) == (1 << 31));
    CHECK(spoke_block_size(3, 8) == 3);  // ceil(64^(1/3)) - 1
    CHECK(spoke_block_size(2, 9) == 2);  // ceil(9^(1/2)) - 1
    CHECK(spoke_block_size(2, 10) == 3);
}

TEST_CASE("multiset tuple pool")
{
    auto a = multiset_tuple_pool(2, 3);
    CHECK(a.labels == 2);
    CHECK(a.tuples == std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}});
    CHECK(multiset_tuple_pool(1, 4).labels == 4);
    CHECK(multiset_tuple_pool(4, 5).labels == 2);
    CHECK_THROWS_AS(multiset_tuple_pool(0, 3), Error);

    for (int j = 1; j <= 5; ++j)
        for (int count = 1; count <= 60; ++count) {
            auto pool = multiset_tuple_pool(j, count);
            CHECK(pool.tuples.size() == static_cast<std::size_t>(count));
            std::set<std::vector<int>> distinct(pool.tuples.begin(), pool.tuples.end());
            CHECK(distinct.size() == pool.tuples.size());
            CHECK(binomial(j + pool.labels - 1, pool.labels - 1) >= count);
            if (pool.labels > 1)
                CHECK(binomial(j + pool.labels - 2, pool.labels - 2) < count);
            for (const auto& t : pool.tuples) {
                CHECK(std::is_sorted(t.begin(), t.end()));
                CHECK(t.front() >= 1);
                CHECK(t.back() <= pool.labels);
            }
        }
}

TEST_CASE("pendant gadgets")
{
    CHECK(find_pendant_gadget(gen_friendship(3), 0).kind == GadgetKind::friendship);
    CHECK(find_pendant_gadget(gen_friendship(3), 0).triangles.size() == 3);
    for (Vertex v = 0; v < 4; ++v)
        CHECK(find_pendant_gadget(gen_complete(4), v).kind == GadgetKind::none);
    CHECK(find_pendant_gadget(triangle_on_hexagon(), 0).kind == GadgetKind::single_triangle);
    CHECK_THROWS_AS(find_pendant_gadget(gen_cycle(5), 7), Error);
}

TEST_CASE("gadget labelings")
{
    auto single = label_friendship_gadget(find_pendant_gadget(triangle_on_hexagon(), 0));
    CHECK(single.labels == 3);
    std::set<int> spoke_labels;
    for (auto [e, l] : single.assignments)
        if (e.u == 0)
            spoke_labels.insert(l);
        else
            CHECK(l == 2);
    CHECK(spoke_labels == std::set<int>{0, 1});

    // F_2's gadget fits in two labels, F_3's needs three.
    auto f2 = label_friendship_gadget(find_pendant_gadget(gen_friendship(2), 0));
    CHECK(f2.labels == 2);
    auto f3 = label_friendship_gadget(find_pendant_gadget(gen_friendship(3), 0));
    CHECK(f3.labels == 3);

    // The gadget labeling of F_n with labels shifted to 1.. is distinguishing.
    for (int n = 2; n <= 6; ++n) {
        Graph g = gen_friendship(n);
        auto gl = label_friendship_gadget(find_pendant_gadget(g, 0));
        EdgeLabeling lab{std::vector<int>(g.size(), 0)};
        for (auto [e, l] : gl.assignments)
            lab.labels[g.edge_index(e.u, e.v)] = l + 1;
        CHECK(is_distinguishing(g, lab).distinguishing);
        CHECK(gl.labels == formula_friendship(n));
    }
}

TEST_CASE("hamiltonian path search")
{
    auto k6 = find_hamiltonian_path(gen_complete(6));
    REQUIRE(k6.path);
    CHECK(k6.path->size() == 6);

    Graph pet = gen_petersen();
    auto p = find_hamiltonian_path(pet);
    REQUIRE(p.path);
    std::set<Vertex> seen(p.path->begin(), p.path->end());
    CHECK(seen.size() == 10);
    for (std::size_t i = 0; i + 1 < p.path->size(); ++i)
        CHECK(pet.adjacent((*p.path)[i], (*p.path)[i + 1]));

    auto star = find_hamiltonian_path(gen_complete_bipartite(1, 3));
    CHECK_FALSE(star.path);
    CHECK(star.exhausted);

    auto cut = find_hamiltonian_path(gen_complete(8), 3);
    CHECK_FALSE(cut.exhausted);
}

TEST_CASE("construct_thm23 examples")
{
    auto pet = construct_thm23(gen_petersen());
    CHECK(pet.ok());
    CHECK(pet.budget == 3);
    CHECK(verify_certificate(gen_petersen(), pet.certificate));

    auto c6 = construct_thm23(gen_cycle(6));
    CHECK(c6.ok());
    CHECK(c6.certificate.labeling.label_count() <= 3);

    auto k33 = construct_thm23(gen_complete_bipartite(3, 3));
    CHECK(k33.ok());
    CHECK(k33.route == "delta-le-5");
    CHECK(k33.certificate.labeling.label_count() == 3);

    CHECK_THROWS_AS(construct_thm23(gen_path(5)), Error);
    CHECK_THROWS_AS(construct_thm23(build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})), Error);
}

TEST_CASE("construct_thm23 on larger random graphs takes the layered route")
{
    std::mt19937_64 rng(5);
    int layered = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_min_degree_graph(14 + trial % 12, 0.3, rng);
        auto ds = degree_stats(g);
        auto c = construct_thm23(g);
        CAPTURE(write_graph6(g));
        CHECK(c.ok());
        CHECK(c.budget == paper_bound(ds.min_degree, ds.max_degree));
        CHECK(verify_certificate(g, c.certificate));
        layered += c.route == "layered";
    }
    CHECK(layered > 0);
}

TEST_CASE("construct_thm23 with pendant triangles at the root")
{
    // Hub 0 joined to a 7-cycle plus two pendant triangles: Δ = 11, δ = 2.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= 7; ++i) {
        pairs.emplace_back(0, i);
        pairs.emplace_back(i, i % 7 + 1);
    }
    pairs.insert(pairs.end(), {{0, 8}, {0, 9}, {8, 9}, {0, 10}, {0, 11}, {10, 11}});
    Graph g = build_graph(12, pairs);
    auto c = construct_thm23(g);
    CHECK(c.ok());
    CHECK(c.budget == 5);
    CHECK(c.route == "layered");
}

TEST_CASE("construct_thm23 is reproducible for a fixed seed")
{
    std::mt19937_64 rng(17);
    Graph g = random_min_degree_graph(20, 0.3, rng);
    ConstructOptions o;
    o.seed = 3;
    CHECK(construct_thm23(g, o).certificate.labeling == construct_thm23(g, o).certificate.labeling);
}

TEST_CASE("construct_thm32 examples")
{
    auto k6 = construct_thm32(gen_complete(6));
    CHECK(k6.route == "hamiltonian");
    CHECK(k6.ok());
    CHECK(k6.certificate.labeling.label_count() == 2);

    CHECK_THROWS_AS(construct_thm32(gen_petersen()), Error);
    CHECK_THROWS_AS(construct_thm32(gen_complete_bipartite(2, 3)), Error);

    int offsets[] = {1, 2, 6};  // 5-regular circulant on 12 vertices
    Graph circ = gen_circulant(12, offsets);
    REQUIRE(degree_stats(circ).regular_k == 5);
    auto c = construct_thm32(circ);
    CHECK(c.ok());
    CHECK(c.certificate.labeling.label_count() <= 2);
    CHECK(verify_certificate(circ, c.certificate));
}

TEST_CASE("construct_thm32 root palette is unique")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        for (auto [n, k] : {std::pair{12, 5}, std::pair{16, 5}, std::pair{18, 5}}) {
            Graph g = gen_random_regular(n, k, seed);
            auto c = construct_thm32(g);
            CAPTURE(write_graph6(g));
            CHECK(c.ok());
            if (c.certificate.root)
                CHECK(only_root_all_ones(g, c.certificate.labeling, *c.certificate.root));
        }
    }
}

TEST_CASE("constructed counts bound the exact index from above")
{
    for (const Graph& g : testing::read_corpus("graphs_n6.g6")) {
        if (! is_connected(g) || degree_stats(g).min_degree < 2)
            continue;
        auto c = construct_thm23(g);
        REQUIRE(c.ok());
        auto exact = exact_distinguishing_index(g);
        REQUIRE(exact.status == SolveStatus::solved);
        CHECK(exact.dprime <= c.certificate.labeling.label_count());
    }
}
