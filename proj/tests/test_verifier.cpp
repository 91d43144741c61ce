#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "symbreak/verifier.hpp"

using namespace symbreak;
using namespace testutil;

TEST_CASE("preserves_edge_colouring") {
    const Graph k3 = complete_graph(3);
    const EdgeColouring c = colouring_from_map(k3, {{{0, 1}, "a"}, {{0, 2}, "b"}, {{1, 2}, "x"}});
    CHECK(preserves_edge_colouring(k3, Permutation::identity(3), c));
    CHECK_FALSE(preserves_edge_colouring(k3, Permutation{{0, 2, 1}}, c)); // 01 -> 02

    const Graph c4 = cycle_graph(4);
    const EdgeColouring alternating = colouring_from_map(
        c4, {{{0, 1}, "r"}, {{2, 3}, "r"}, {{1, 2}, "b"}, {{0, 3}, "b"}});
    CHECK(preserves_edge_colouring(c4, Permutation{{2, 3, 0, 1}}, alternating));

    EdgeColouring incomplete;
    CHECK_THROWS_AS(preserves_edge_colouring(k3, Permutation::identity(3), incomplete),
                    std::invalid_argument);
}

TEST_CASE("breaks_all_small") {
    const Graph p3 = path_graph(3);
    CHECK(breaks_all_small(p3, constant_colouring(p3)).ok);

    const Graph k3 = complete_graph(3);
    const auto bad = breaks_all_small(k3, constant_colouring(k3));
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness.has_value());
    CHECK(is_small(k3, *bad.witness));
    CHECK(preserves_edge_colouring(k3, *bad.witness, constant_colouring(k3)));
    // first small automorphism in lexicographic order is the transposition [0,2,1]
    CHECK(*bad.witness == Permutation{{0, 2, 1}});

    const EdgeColouring rainbow =
        colouring_from_map(k3, {{{0, 1}, "1"}, {{0, 2}, "2"}, {{1, 2}, "3"}});
    const auto good = breaks_all_small(k3, rainbow);
    CHECK(good.ok);
    CHECK(good.checked_count == 5); // every non-identity automorphism of K3 is small
}

TEST_CASE("breaks_all_small_rooted") {
    const Graph c4 = cycle_graph(4);
    CHECK(breaks_all_small_rooted(c4, 0, constant_colouring(c4)).ok);

    const Graph c5 = cycle_graph(5);
    const auto bad = breaks_all_small_rooted(c5, 0, constant_colouring(c5));
    CHECK_FALSE(bad.ok);
    CHECK(*bad.witness == Permutation{{0, 4, 3, 2, 1}}); // i -> -i mod 5, swaps adjacent 2,3

    EdgeColouring c = constant_colouring(c5);
    c.by_edge[c5.edge_index(0, 1)] = "2"; // c(01) != c(04) kills that reflection
    CHECK(breaks_all_small_rooted(c5, 0, c).ok);
}

TEST_CASE("root_is_fixed") {
    const Graph k3 = complete_graph(3);
    CHECK_FALSE(root_is_fixed(k3, constant_colouring(k3), 0));

    // distinct colours at vertex 0 pin it down
    const EdgeColouring rainbow =
        colouring_from_map(k3, {{{0, 1}, "1"}, {{0, 2}, "2"}, {{1, 2}, "3"}});
    CHECK(root_is_fixed(k3, rainbow, 0));

    const Graph rigid(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
    CHECK(root_is_fixed(rigid, constant_colouring(rigid), 3));
}

TEST_CASE("total colouring verification") {
    const Graph k3 = complete_graph(3);

    TotalColouring flat{constant_colouring(k3), {"1", "1", "1"}};
    CHECK_FALSE(breaks_all_small_total(k3, flat).ok);

    // unique vertex colour at 0 plus distinct edges 01/02
    TotalColouring pinned{
        colouring_from_map(k3, {{{0, 1}, "1"}, {{0, 2}, "2"}, {{1, 2}, "1"}}),
        {"a", "b", "b"}};
    CHECK(breaks_all_small_total(k3, pinned).ok);

    // a preserved automorphism must fix the uniquely coloured vertex
    for (const Permutation& p : colour_preserving_automorphisms(k3, pinned)) CHECK(p(0) == 0);

    TotalColouring incomplete{constant_colouring(k3), {"1", "1"}};
    CHECK_THROWS_AS(breaks_all_small_total(k3, incomplete), std::invalid_argument);
}

namespace {

EdgeColouring random_colouring(const Graph& g, std::mt19937& rng, int colours) {
    EdgeColouring c;
    c.by_edge.reserve(g.edges().size());
    for (int i = 0; i < g.edge_count(); ++i)
        c.by_edge.push_back(std::to_string(1 + rng() % colours));
    return c;
}

} // namespace

TEST_CASE("witness soundness on random colourings") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Graph g = graph_from_mask(n, rng() & ((1u << (n * (n - 1) / 2)) - 1));
        const EdgeColouring c = random_colouring(g, rng, 1 + rng() % 3);
        const auto report = breaks_all_small(g, c);
        if (!report.ok) {
            REQUIRE(report.witness.has_value());
            CHECK(is_small(g, *report.witness));
            CHECK(preserves_edge_colouring(g, *report.witness, c));
        }
    }
}

TEST_CASE("refining a colouring never breaks fewer automorphisms") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const Graph g = graph_from_mask(n, rng() & ((1u << (n * (n - 1) / 2)) - 1));
        if (g.edge_count() == 0) continue;
        EdgeColouring c = random_colouring(g, rng, 2);
        const bool ok_before = breaks_all_small(g, c).ok;
        // split one colour class: recolour a random subset of one class with
        // a fresh token
        const Colour target = c.by_edge[rng() % c.by_edge.size()];
        EdgeColouring refined = c;
        for (auto& colour : refined.by_edge)
            if (colour == target && rng() % 2) colour = "fresh";
        if (ok_before) CHECK(breaks_all_small(g, refined).ok);
    }
}

TEST_CASE("global verdict equals the conjunction of component verdicts") {
    // exhaustive over all disconnected labelled graphs on 4 vertices and all
    // 2-colourings of their edges
    for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
        const Graph g = graph_from_mask(4, mask);
        const auto comps = connected_components(g);
        if (comps.size() < 2) continue;
        const int m = g.edge_count();
        for (std::uint32_t cmask = 0; cmask < (1u << m); ++cmask) {
            EdgeColouring c;
            for (int i = 0; i < m; ++i) c.by_edge.push_back((cmask >> i) & 1 ? "2" : "1");
            bool all_components_ok = true;
            for (const auto& comp : comps) {
                const auto sub = induced_subgraph(g, comp);
                EdgeColouring restricted;
                for (const Edge& e : sub.graph.edges())
                    restricted.by_edge.push_back(
                        c.by_edge[g.edge_index(sub.original_ids[e.u], sub.original_ids[e.v])]);
                if (!breaks_all_small(sub.graph, restricted).ok) {
                    all_components_ok = false;
                    break;
                }
            }
            CHECK(breaks_all_small(g, c).ok == all_components_ok);
        }
    }
}
