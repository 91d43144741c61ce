#ifndef SYMBREAK_CONSTRUCTOR_HPP
#define SYMBREAK_CONSTRUCTOR_HPP

#include <cstdint>
#include <vector>

#include "symbreak/automorphism.hpp"
#include "symbreak/colouring.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

// Every constructor below re-checks its own output with the verifier before
// returning and throws std::logic_error if the check fails; a failed check
// signals an implementation bug, not bad input.

// Rooted colouring of a connected graph with max degree <= 2 from 2-lists.
// Paths take the first token of every list; on a cycle the two edges at the
// root get distinct tokens. Breaks all small automorphisms fixing root.
EdgeColouring base_case_rooted_colouring(const Graph& h, int root, const ListAssignment& lists,
                                         const EngineLimits& limits = {});

// Rooted colouring of a connected graph (not K2) from 2-lists that breaks
// every small automorphism fixing root. Recursion over the stabilizer
// orbits: each orbit-induced component is coloured recursively (its maximum
// degree strictly drops), its root gets a uniquely-coloured back edge
// towards the previous orbits, and all other back edges of the component
// avoid that colour.
EdgeColouring lemma_rooted_colouring(const Graph& h, int root, const ListAssignment& lists,
                                     const EngineLimits& limits = {});

// Unrooted colouring of a connected graph with max degree <= 2 (not K2)
// breaking every small automorphism. Paths need 2-lists, cycles 3-lists.
EdgeColouring degree_le2_component_colouring(const Graph& h, const ListAssignment& lists,
                                             const EngineLimits& limits = {});

struct TheoremOptions {
    // Budget for the exhaustive backstop of the correction step. The
    // backstop is expected to stay unreachable.
    std::uint64_t fallback_budget = 100'000'000;
};

struct TheoremResult {
    EdgeColouring colouring;
    std::vector<CorrectionTrace> traces; // one per component, by minimum vertex id
};

// Edge colouring from 3-lists breaking every small automorphism of g.
// Per component: reserve one token ("pink") from the root's minimum edge
// list, run the rooted construction on the pink-free lists, then fix the
// root by a small recolouring around it. Each correction branch is guarded
// by list membership and accepted only when the verifier passes; a bounded
// verified search backstops the branches.
TheoremResult theorem_edge_colouring(const Graph& g, const ListAssignment& lists,
                                     const EngineLimits& limits = {},
                                     const TheoremOptions& options = {});

// Total colouring from 2-lists on vertices and edges breaking every small
// automorphism. Edges come from the rooted construction; the component root
// is the unique vertex of its colour within its component.
TotalColouring total_colouring(const Graph& g, const ListAssignment& lists,
                               const EngineLimits& limits = {});

} // namespace symbreak

#endif
