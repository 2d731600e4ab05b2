#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dindex {

using Vertex = int;

/// Raised for malformed input: bad vertex ids, self-loops, malformed graph6,
/// or a precondition that an entry point refuses (e.g. a disconnected graph).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr int kDefaultVertexCap = 512;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one bit row per vertex (64-bit words) so the
/// refinement kernels can intersect rows with cell masks. The edge list is
/// canonical: (u,v) with u<v, sorted lexicographically, no duplicates. Edge
/// indices into that list are the coordinates every labeling uses.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    int words_per_row() const { return words_; }

    bool adjacent(Vertex u, Vertex v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
    }
    std::span<const std::uint64_t> row(Vertex u) const {
        return {rows_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)};
    }
    const std::vector<Vertex>& neighbors(Vertex u) const { return adj_[u]; }
    int degree(Vertex u) const { return static_cast<int>(adj_[u].size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    /// Index of edge {u,v} in edges(), or -1 if not adjacent.
    int edge_index(Vertex u, Vertex v) const { return edge_id_[static_cast<std::size_t>(u) * n_ + v]; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    friend Graph build_graph(int n, std::span<const std::pair<int, int>> edge_pairs, int vertex_cap);

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
    std::vector<int> edge_id_;
};

/// Canonicalizes an edge list. Duplicate and reversed pairs collapse; an
/// out-of-range endpoint or a self-loop throws Error naming the pair.
Graph build_graph(int n, std::span<const std::pair<int, int>> edge_pairs, int vertex_cap = kDefaultVertexCap);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_pairs);

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// Reads newline separated graph6 text, skipping blank lines and an optional
/// ">>graph6<<" header. Each entry keeps the raw line so callers can report it.
struct Graph6Line {
    std::size_t line_no;
    std::string text;
};
std::vector<Graph6Line> split_graph6_lines(std::string_view text);

struct DegreeStats {
    std::vector<int> degrees;
    int min_degree = 0;
    int max_degree = 0;
    std::optional<int> regular_k;
};

DegreeStats degree_stats(const Graph& g);

struct BfsLayers {
    Vertex root = 0;
    std::vector<std::vector<Vertex>> layers;  // layers[i] = vertices at distance i, sorted
    std::vector<int> distance;                // -1 outside the root's component
    int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
};

BfsLayers bfs_layers(const Graph& g, Vertex root);

bool is_connected(const Graph& g);
/// Throws Error on a disconnected graph.
int diameter(const Graph& g);
/// Connected, at least 3 vertices and no cut vertex.
bool is_biconnected(const Graph& g);

}  // namespace dindex
