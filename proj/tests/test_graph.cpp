#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "helpers.hpp"
#include "symbreak/graph.hpp"

using namespace symbreak;
using namespace testutil;

namespace {

// Independent graph6 encoder used as the oracle for the parser. It works
// from the adjacency predicate alone and shares no code with the library.
std::string oracle_encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out(1, static_cast<char>(63 + n));
    int block = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            block = (block << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + block));
                block = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(63 + (block << (6 - filled))));
    return out;
}

} // namespace

TEST_CASE("graph construction normalizes and validates") {
    Graph g(4, {{3, 1}, {0, 1}, {1, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2); // duplicate (1,3) merged
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 3}});
    CHECK(g.adjacent(3, 1));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK(g.edge_index(1, 0) == 0);
    CHECK(g.edge_index(0, 2) == -1);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_edge(2, 2), std::invalid_argument);
}

TEST_CASE("parse_graph6 matches the oracle encoder on named graphs") {
    CHECK(oracle_encode_graph6(complete_graph(3)) == "Bw");
    CHECK(parse_graph6("Bw") == complete_graph(3));

    CHECK(parse_graph6("@") == Graph(1, {}));

    const Graph c4 = cycle_graph(4);
    CHECK(parse_graph6(oracle_encode_graph6(c4)) == c4);
    CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("parse_graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("?"), std::invalid_argument);      // order zero
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);    // long form
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);      // missing payload
    CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument);    // payload too long
    CHECK_THROWS_AS(parse_graph6("B\x20"), std::invalid_argument);  // byte out of range
    CHECK_THROWS_AS(parse_graph6("B!"), std::invalid_argument);
    // K3 payload has three data bits; a nonzero padding bit is rejected.
    CHECK_THROWS_AS(parse_graph6(std::string("B") + static_cast<char>(63 + 57)),
                    std::invalid_argument);
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));
}

TEST_CASE("graph6 round trip: all labelled graphs up to n=5, random up to n=8") {
    for (int n = 1; n <= 5; ++n) {
        const int bits = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const std::string oracle = oracle_encode_graph6(g);
            CHECK(encode_graph6(g) == oracle);
            CHECK(parse_graph6(oracle) == g);
        }
    }
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 3);
        std::uint32_t mask = rng();
        mask &= (1u << (n * (n - 1) / 2)) - 1;
        const Graph g = graph_from_mask(n, mask);
        CHECK(parse_graph6(encode_graph6(g)) == g);
        CHECK(encode_graph6(g) == oracle_encode_graph6(g));
    }
}

TEST_CASE("parse_edge_list") {
    const Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3 == path_graph(3));

    const Graph declared = parse_edge_list("n 4\n0 1");
    CHECK(declared.vertex_count() == 4);
    CHECK(declared.edge_count() == 1);

    CHECK(parse_edge_list("0 1\n0 1").edge_count() == 1);
    CHECK(parse_edge_list("").vertex_count() == 0);
    CHECK(parse_edge_list("1 0").edges() == std::vector<Edge>{{0, 1}});

    CHECK_THROWS_AS(parse_edge_list("0 -1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("0 x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), std::invalid_argument);
}

TEST_CASE("connected_components") {
    CHECK(connected_components(complete_graph(3)) ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    const Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK(connected_components(two_edges) == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(connected_components(Graph(3, {})) ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(connected_components(Graph(0, {})).empty());
}

TEST_CASE("bfs_distances") {
    CHECK(bfs_distances(path_graph(3), 0) == std::vector<int>{0, 1, 2});
    CHECK(bfs_distances(complete_graph(3), 1) == std::vector<int>{1, 0, 1});
    const Graph g(3, {{0, 1}});
    CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, -1});
    CHECK_THROWS_AS(bfs_distances(g, 3), std::invalid_argument);
}

TEST_CASE("bfs distances differ by at most one across any edge") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = graph_from_mask(n, rng() & ((1u << (n * (n - 1) / 2)) - 1));
        const auto dist = bfs_distances(g, static_cast<int>(rng() % n));
        for (const Edge& e : g.edges())
            if (dist[e.u] >= 0 && dist[e.v] >= 0) CHECK(std::abs(dist[e.u] - dist[e.v]) <= 1);
    }
}

TEST_CASE("induced_subgraph") {
    const std::vector<int> s{0, 1, 2};
    const auto sub = induced_subgraph(cycle_graph(4), s);
    CHECK(sub.graph == path_graph(3));
    CHECK(sub.original_ids == s);

    const Graph k4 = complete_graph(4);
    const std::vector<int> all{0, 1, 2, 3};
    CHECK(induced_subgraph(k4, all).graph == k4);

    const std::vector<int> pair{0, 1};
    CHECK(induced_subgraph(k4, pair).graph == complete_graph(2));

    const std::vector<int> bad{0, 9};
    CHECK_THROWS_AS(induced_subgraph(k4, bad), std::invalid_argument);
}

TEST_CASE("max_degree") {
    CHECK(max_degree(complete_graph(4)) == 3);
    CHECK(max_degree(path_graph(3)) == 2);
    CHECK(max_degree(Graph(5, {})) == 0);
}
