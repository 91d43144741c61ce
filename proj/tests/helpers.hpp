#ifndef SYMBREAK_TEST_HELPERS_HPP
#define SYMBREAK_TEST_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "symbreak/colouring.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"

namespace testutil {

inline symbreak::Graph path_graph(int n) {
    std::vector<symbreak::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return symbreak::Graph(n, std::move(edges));
}

inline symbreak::Graph cycle_graph(int n) {
    std::vector<symbreak::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return symbreak::Graph(n, std::move(edges));
}

inline symbreak::Graph complete_graph(int n) {
    std::vector<symbreak::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return symbreak::Graph(n, std::move(edges));
}

inline symbreak::Graph star_graph(int leaves) {
    std::vector<symbreak::Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return symbreak::Graph(leaves + 1, std::move(edges));
}

// Union of two graphs on disjoint vertex ranges.
inline symbreak::Graph disjoint_union(const symbreak::Graph& a, const symbreak::Graph& b) {
    std::vector<symbreak::Edge> edges(a.edges());
    for (const symbreak::Edge& e : b.edges())
        edges.push_back({e.u + a.vertex_count(), e.v + a.vertex_count()});
    return symbreak::Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

// Graph from an upper-triangle bitmask in column-major bit order, the same
// order used by the graph6 payload.
inline symbreak::Graph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<symbreak::Edge> edges;
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1) edges.push_back({u, v});
    return symbreak::Graph(n, std::move(edges));
}

// Test-side automorphism oracle: filter all n! permutations.
inline std::vector<symbreak::Permutation> brute_force_automorphisms(const symbreak::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    std::vector<symbreak::Permutation> out;
    do {
        symbreak::Permutation p{image};
        if (symbreak::is_automorphism(g, p)) out.push_back(std::move(p));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

inline symbreak::EdgeColouring colouring_from_map(
    const symbreak::Graph& g, const std::map<std::pair<int, int>, std::string>& colours) {
    symbreak::EdgeColouring c;
    c.by_edge.resize(g.edges().size());
    for (const auto& [uv, colour] : colours)
        c.by_edge[g.edge_index(uv.first, uv.second)] = colour;
    return c;
}

inline symbreak::EdgeColouring constant_colouring(const symbreak::Graph& g,
                                                  const std::string& colour = "1") {
    symbreak::EdgeColouring c;
    c.by_edge.assign(g.edges().size(), colour);
    return c;
}

} // namespace testutil

#endif
