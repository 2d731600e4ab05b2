#include <dindex/families.hpp>
#include <dindex/graph.hpp>

#include "corpus.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace dindex;

namespace {

std::vector<int> layer_sizes(const BfsLayers& b)
{
    std::vector<int> out;
    for (const auto& l : b.layers)
        out.push_back(static_cast<int>(l.size()));
    return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                pairs.emplace_back(u, v);
    return build_graph(n, pairs);
}

}  // namespace

TEST_CASE("build_graph canonicalizes and rejects bad pairs")
{
    Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.size() == 3);
    CHECK(k3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

    Graph dup = build_graph(4, {{0, 1}, {1, 0}});
    CHECK(dup.size() == 1);
    CHECK(dup.edge_index(1, 0) == 0);
    CHECK(dup.edge_index(2, 3) == -1);

    CHECK_THROWS_AS(build_graph(5, {{0, 5}}), Error);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), Error);
    std::vector<std::pair<int, int>> none;
    CHECK_THROWS_AS(build_graph(600, none), Error);
}

TEST_CASE("graph6 examples")
{
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

    Graph c4 = parse_graph6("Cl");
    CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    Graph e2 = parse_graph6("A?");
    CHECK(e2.order() == 2);
    CHECK(e2.size() == 0);

    CHECK(write_graph6(gen_complete(3)) == "Bw");
    CHECK(write_graph6(build_graph(2, std::vector<std::pair<int, int>>{})) == "A?");
}

TEST_CASE("graph6 rejects malformed input")
{
    CHECK_THROWS_AS(parse_graph6(""), Error);
    CHECK_THROWS_AS(parse_graph6("Bww"), Error);  // one byte too many
    CHECK_THROWS_AS(parse_graph6("C"), Error);    // body missing
    CHECK_THROWS_AS(parse_graph6("B "), Error);   // below 63
    CHECK_THROWS_AS(parse_graph6("B\x7f"), Error);
}

TEST_CASE("graph6 round trip on corpora and large n")
{
    for (const char* file : {"graphs_n5.g6", "graphs_n7.g6", "connected_m10_n11.g6"})
        for (const Graph& g : testing::read_corpus(file)) {
            auto text = write_graph6(g);
            CHECK(parse_graph6(text) == g);
        }

    std::mt19937_64 rng(7);
    for (int n : {0, 1, 62, 63, 100, 300}) {
        Graph g = random_graph(n, 0.1, rng);
        auto text = write_graph6(g);
        if (n >= 63)
            CHECK(text.front() == '~');
        CHECK(parse_graph6(text) == g);
        CHECK(write_graph6(parse_graph6(text)) == text);
    }
}

TEST_CASE("split_graph6_lines skips header and blanks")
{
    auto lines = split_graph6_lines(">>graph6<<Bw\n\nCl\r\n  \nA?");
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].text == "Bw");
    CHECK(lines[1].text == "Cl");
    CHECK(lines[1].line_no == 3);
    CHECK(lines[2].text == "A?");
}

TEST_CASE("degree stats")
{
    auto p = degree_stats(gen_petersen());
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 3);
    CHECK(p.regular_k == 3);

    auto k23 = degree_stats(gen_complete_bipartite(2, 3));
    CHECK(k23.min_degree == 2);
    CHECK(k23.max_degree == 3);
    CHECK_FALSE(k23.regular_k);

    auto star = degree_stats(gen_complete_bipartite(1, 5));
    CHECK(star.min_degree == 1);
    CHECK(star.max_degree == 5);
}

TEST_CASE("bfs layers, connectivity and diameter")
{
    for (int v = 0; v < 6; ++v)
        CHECK(layer_sizes(bfs_layers(gen_cycle(6), v)) == std::vector<int>{1, 2, 2, 1});
    CHECK(layer_sizes(bfs_layers(gen_complete(4), 2)) == std::vector<int>{1, 3});
    CHECK(layer_sizes(bfs_layers(gen_path(4), 0)) == std::vector<int>{1, 1, 1, 1});
    CHECK_THROWS_AS(bfs_layers(gen_path(4), 4), Error);

    CHECK(is_connected(gen_cycle(6)));
    CHECK(diameter(gen_cycle(6)) == 3);
    Graph two = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_connected(two));
    CHECK_THROWS_AS(diameter(two), Error);
    CHECK(diameter(gen_petersen()) == 2);
}

TEST_CASE("layer partition and handshake invariants")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 30;
        Graph g = random_graph(n, 0.25, rng);
        int sum = 0;
        for (Vertex u = 0; u < n; ++u)
            sum += g.degree(u);
        CHECK(sum == 2 * g.size());

        auto b = bfs_layers(g, 0);
        std::vector<int> seen(n, 0);
        for (const auto& layer : b.layers)
            for (Vertex u : layer)
                ++seen[u];
        for (Vertex u = 0; u < n; ++u)
            CHECK(seen[u] == (b.distance[u] >= 0 ? 1 : 0));
        if (b.layers.size() > 1)
            CHECK(static_cast<int>(b.layers[1].size()) == g.degree(0));
        for (auto [u, v] : g.edges())
            if (b.distance[u] >= 0)
                CHECK(std::abs(b.distance[u] - b.distance[v]) <= 1);
    }
}

TEST_CASE("biconnectivity counts on the all-graphs corpora")
{
    // 2-connected graphs on 3..8 vertices, as counted by geng -C.
    const int expected[] = {1, 3, 10, 56, 468, 7123};
    for (int n = 3; n <= 8; ++n) {
        int count = 0;
        for (const Graph& g : testing::read_corpus("graphs_n" + std::to_string(n) + ".g6"))
            count += is_biconnected(g);
        CHECK(count == expected[n - 3]);
    }
    CHECK_FALSE(is_biconnected(gen_path(4)));
    CHECK(is_biconnected(gen_cycle(4)));
    CHECK_FALSE(is_biconnected(gen_friendship(2)));
}
