#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/verifier.hpp"

using namespace symbreak;
using namespace testutil;

namespace {

// Test-side oracle: try every colouring with tokens {1..k} against the
// brute-forced small automorphisms. Independent of the library's search.
bool brute_force_breakable(const Graph& g, int k) {
    std::vector<Permutation> smalls;
    for (const Permutation& p : brute_force_automorphisms(g))
        if (is_small(g, p)) smalls.push_back(p);
    const int m = g.edge_count();
    std::vector<int> digits(m, 0);
    while (true) {
        EdgeColouring c;
        for (int i = 0; i < m; ++i) c.by_edge.push_back(std::to_string(digits[i] + 1));
        bool broken_all = true;
        for (const Permutation& p : smalls)
            if (preserves_edge_colouring(g, p, c)) {
                broken_all = false;
                break;
            }
        if (broken_all) return true;
        int i = m - 1;
        while (i >= 0 && ++digits[i] == k) digits[i--] = 0;
        if (i < 0) return false;
    }
}

} // namespace

TEST_CASE("exists_breaking_colouring") {
    const Graph k3 = complete_graph(3);
    CHECK_FALSE(exists_breaking_colouring(k3, uniform_lists(k3, 2)).has_value());

    const auto rainbow = exists_breaking_colouring(k3, uniform_lists(k3, 3));
    REQUIRE(rainbow.has_value());
    // lexicographically first breaking colouring of K3 is the rainbow 1,2,3
    CHECK(rainbow->by_edge == std::vector<Colour>{"1", "2", "3"});

    const Graph p3 = path_graph(3);
    const auto constant = exists_breaking_colouring(p3, uniform_lists(p3, 1));
    REQUIRE(constant.has_value());
    CHECK(constant->by_edge == std::vector<Colour>{"1", "1"});
}

TEST_CASE("oracle budget is a hard precondition") {
    const Graph k5 = complete_graph(5);
    OracleOptions tight;
    tight.budget = 100; // 2^10 candidates exceed it
    CHECK_THROWS_AS(exists_breaking_colouring(k5, uniform_lists(k5, 2), tight), budget_error);
}

TEST_CASE("small_distinguishing_index: sharp graphs re-derived by brute force") {
    struct Row {
        const char* name;
        Graph g;
        int expected;
    };
    const std::vector<Row> rows{
        {"K3", complete_graph(3), 3}, {"K4", complete_graph(4), 3}, {"K5", complete_graph(5), 3},
        {"C4", cycle_graph(4), 2},    {"C5", cycle_graph(5), 3},
    };
    for (const Row& row : rows) {
        CAPTURE(row.name);
        // independent derivation first
        CHECK_FALSE(brute_force_breakable(row.g, row.expected - 1));
        CHECK(brute_force_breakable(row.g, row.expected));
        const auto result = small_distinguishing_index(row.g);
        CHECK(result.value == row.expected);
        CHECK(breaks_all_small(row.g, result.witness).ok);
        if (row.expected > 1) {
            std::uint64_t space = 1;
            for (int i = 0; i < row.g.edge_count(); ++i) space *= row.expected - 1;
            CHECK(result.exhausted_below == space);
        }
    }
}

TEST_CASE("small_distinguishing_index: graphs without small automorphisms need one colour") {
    CHECK(small_distinguishing_index(star_graph(3)).value == 1);
    CHECK(small_distinguishing_index(path_graph(3)).value == 1);
    CHECK(small_distinguishing_index(Graph(1, {})).value == 1);
}

TEST_CASE("small_distinguishing_index rejects K2 components") {
    CHECK_THROWS_AS(small_distinguishing_index(complete_graph(2)), std::invalid_argument);
    const Graph g = disjoint_union(complete_graph(3), complete_graph(2));
    CHECK_THROWS_AS(small_distinguishing_index(g), std::invalid_argument);
}

TEST_CASE("more colours never hurt (n <= 5 samples)") {
    for (const Graph& g : {complete_graph(4), cycle_graph(5), star_graph(4), path_graph(4),
                           complete_graph(5)}) {
        const int k = small_distinguishing_index(g).value;
        CHECK(exists_breaking_colouring(g, uniform_lists(g, k + 1)).has_value());
    }
}

TEST_CASE("list index bounds") {
    BoundsOptions canonical;
    canonical.canonical_search = true;

    SUBCASE("no small automorphisms: [1,1]") {
        const auto b = small_list_distinguishing_index_bounds(path_graph(3), canonical);
        CHECK(b.lower == 1);
        CHECK(b.upper == 1);
        CHECK_FALSE(b.lower_certificate.has_value());
    }
    SUBCASE("P4: every 2-assignment admits a breaking choice") {
        const auto b = small_list_distinguishing_index_bounds(path_graph(4), canonical);
        CHECK(b.lower == 2);
        CHECK(b.upper == 2);
        CHECK(b.upper_method == UpperBoundMethod::exhaustive);
    }
    SUBCASE("C4: canonical search settles [2,2]") {
        const auto b = small_list_distinguishing_index_bounds(cycle_graph(4), canonical);
        CHECK(b.lower == 2);
        CHECK(b.upper == 2);
        CHECK(b.upper_method == UpperBoundMethod::exhaustive);
    }
    SUBCASE("C5 and K3: [3,3] with a uniform lower certificate") {
        for (const Graph& g : {cycle_graph(5), complete_graph(3)}) {
            const auto b = small_list_distinguishing_index_bounds(g, canonical);
            CHECK(b.lower == 3);
            CHECK(b.upper == 3);
            CHECK(b.upper_method == UpperBoundMethod::constructive);
            REQUIRE(b.lower_certificate.has_value());
            CHECK_FALSE(b.lower_certificate->adversarial);
            // the certificate is re-verifiable: that assignment admits nothing
            CHECK_FALSE(
                exists_breaking_colouring(g, b.lower_certificate->assignment).has_value());
        }
    }
    SUBCASE("without escalation the upper bound stays constructive") {
        const auto b = small_list_distinguishing_index_bounds(cycle_graph(4));
        CHECK(b.lower == 2);
        CHECK(b.upper == 3);
        CHECK(b.upper_method == UpperBoundMethod::constructive);
    }
}

TEST_CASE("index bounds order: D'_s <= upper <= 3 on assorted graphs") {
    const Graph wheel(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}});
    for (const Graph& g : {complete_graph(6), cycle_graph(6), star_graph(5), wheel,
                           disjoint_union(complete_graph(3), complete_graph(3))}) {
        const auto index = small_distinguishing_index(g);
        const auto bounds = small_list_distinguishing_index_bounds(g);
        CHECK(index.value <= bounds.upper);
        CHECK(bounds.lower <= bounds.upper);
        CHECK(bounds.upper <= 3);
        CHECK(index.value == bounds.lower);
    }
}

TEST_CASE("random_list_assignment") {
    const Graph k4 = complete_graph(4);

    const auto all3 = random_list_assignment(k4, 3, 3, 99);
    for (const auto& list : all3.edge_lists)
        CHECK(list == std::vector<Colour>{"1", "2", "3"});

    const auto a = random_list_assignment(k4, 2, 9, 1, true);
    const auto b = random_list_assignment(k4, 2, 9, 1, true);
    CHECK(a.edge_lists == b.edge_lists);
    CHECK(a.vertex_lists == b.vertex_lists);
    CHECK(a.vertex_lists.size() == 4);
    for (const auto& list : a.edge_lists) CHECK(list.size() == 2);

    const auto other = random_list_assignment(k4, 2, 9, 2, true);
    CHECK(a.edge_lists != other.edge_lists);

    const auto uniform2 = random_list_assignment(k4, 2, 2, 5);
    for (const auto& list : uniform2.edge_lists) CHECK(list == std::vector<Colour>{"1", "2"});

    CHECK_THROWS_AS(random_list_assignment(k4, 3, 2, 0), std::invalid_argument);
}
