#ifndef SYMBREAK_COLOURING_HPP
#define SYMBREAK_COLOURING_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

// Colour tokens are opaque; they are only ever compared for equality and
// ordered lexicographically to make constructions deterministic.
using Colour = std::string;

// Complete edge colouring, parallel to Graph::edges().
struct EdgeColouring {
    std::vector<Colour> by_edge;

    bool operator==(const EdgeColouring&) const = default;
};

struct TotalColouring {
    EdgeColouring edges;
    std::vector<Colour> vertices;

    bool operator==(const TotalColouring&) const = default;
};

// Colour lists per edge (and optionally per vertex), parallel to
// Graph::edges() and to vertex ids. Lists are normalized to sorted distinct
// tokens, so "the first token of a list" always means its minimum.
struct ListAssignment {
    std::vector<std::vector<Colour>> edge_lists;
    std::vector<std::vector<Colour>> vertex_lists; // empty when absent

    bool has_vertex_lists() const noexcept { return !vertex_lists.empty(); }
};

// Sorts and deduplicates every list in place; empty lists are rejected.
void normalize_lists(ListAssignment& lists);

// Uniform lists {"1",...,"k"} on every edge (and vertex when requested).
ListAssignment uniform_lists(const Graph& g, int k, bool include_vertices = false);

// Shape checks used as operation preconditions.
void require_edge_lists(const Graph& g, const ListAssignment& lists, std::size_t min_size);
void require_vertex_lists(const Graph& g, const ListAssignment& lists, std::size_t min_size);
void require_complete(const Graph& g, const EdgeColouring& c);
void require_complete(const Graph& g, const TotalColouring& c);

// First (minimum) token of a list avoiding all banned tokens; throws when
// the list is exhausted.
Colour first_token_excluding(const std::vector<Colour>& list, std::span<const Colour> banned);

bool respects_lists(const Graph& g, const ListAssignment& lists, const EdgeColouring& c);
bool respects_lists(const Graph& g, const ListAssignment& lists, const TotalColouring& c);

ListAssignment restrict_to_subgraph(const Graph& g, const ListAssignment& lists,
                                    const Graph& sub, const std::vector<int>& original_ids);

enum class CorrectionBranch {
    none,
    single_pink,
    monochrome_star,
    bichromatic_swap,
    verified_fallback,
};

const char* to_string(CorrectionBranch b);

struct Recolouring {
    Edge edge;
    Colour before;
    Colour after;
};

// Per-component record of the root-fixing correction: replaying `recoloured`
// on top of the pre-correction colouring yields the final one.
struct CorrectionTrace {
    CorrectionBranch branch = CorrectionBranch::none;
    int root = -1; // -1 for components handled without a root
    std::vector<int> component;
    std::vector<Recolouring> recoloured;
    std::optional<Colour> pink;
    std::optional<Colour> blue;
    std::optional<Colour> red;
};

} // namespace symbreak

#endif
