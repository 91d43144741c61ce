#ifndef SYMBREAK_GRAPH_HPP
#define SYMBREAK_GRAPH_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symbreak {

// Undirected edge stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Canonical edge for an unordered pair; throws on a == b.
Edge make_edge(int a, int b);

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; adjacency lists and the edge list are kept sorted.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edge_list);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

    // Position of (u,v) in edges(), or -1 when absent.
    int edge_index(int u, int v) const;
    int edge_index(Edge e) const { return edge_index(e.u, e.v); }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> row_start_; // edges_ slice per smaller endpoint
};

// graph6, single-byte order only (1 <= n <= 62). The payload covers the
// upper triangle in column-major order (0,1),(0,2),(1,2),(0,3),...
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Lines of "u v", optional leading "n <count>" line. Duplicate edges are
// merged; loops, negative ids and non-integer tokens are rejected.
Graph parse_edge_list(std::string_view text);

// Vertex sets of the connected components, each sorted, ordered by their
// minimum vertex id. Together they partition V.
std::vector<std::vector<int>> connected_components(const Graph& g);

// BFS distance from root per vertex; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int root);

struct InducedSubgraph {
    Graph graph;
    // original_ids[new_id] = old id, ascending; the inverse is the relabel
    // map old -> new.
    std::vector<int> original_ids;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

int max_degree(const Graph& g);

} // namespace symbreak

#endif
