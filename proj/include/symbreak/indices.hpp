#ifndef SYMBREAK_INDICES_HPP
#define SYMBREAK_INDICES_HPP

#include <cstdint>
#include <optional>

#include "symbreak/automorphism.hpp"
#include "symbreak/colouring.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

struct OracleOptions {
    // Maximum number of candidate colourings (product of list sizes) the
    // exhaustive search may enumerate; larger products raise budget_error
    // up front. Answers are definitive or absent, never sampled.
    std::uint64_t budget = 10'000'000;
};

// Exhaustive search in lexicographic colouring order for a list-respecting
// edge colouring that breaks every small automorphism. Returns the first
// such colouring, or nullopt when none exists.
std::optional<EdgeColouring> exists_breaking_colouring(const Graph& g, const ListAssignment& lists,
                                                       const OracleOptions& options = {},
                                                       const EngineLimits& limits = {});

struct SmallIndexResult {
    int value = 1;
    EdgeColouring witness;            // breaking colouring with `value` uniform colours
    std::uint64_t exhausted_below = 0; // colourings checked (and failed) at value-1
};

// Least k such that the uniform lists {1..k} admit a breaking colouring.
// Rejects graphs with a K2 component (no colouring can break its swap).
SmallIndexResult small_distinguishing_index(const Graph& g, const OracleOptions& options = {},
                                            const EngineLimits& limits = {});

enum class UpperBoundMethod {
    constructive, // the 3-list constructive colouring
    exhaustive,   // canonical pattern enumeration proved every assignment admits one
};

struct LowerBoundCertificate {
    ListAssignment assignment; // at size lower-1, admits no breaking colouring
    std::uint64_t colourings_checked = 0;
    bool adversarial = false; // true when found by canonical pattern search
};

struct IndexBounds {
    int lower = 1;
    int upper = 3;
    std::optional<LowerBoundCertificate> lower_certificate; // absent when lower == 1
    UpperBoundMethod upper_method = UpperBoundMethod::constructive;
};

struct BoundsOptions {
    std::uint64_t budget = 10'000'000;
    // Escalate beyond uniform lists: enumerate list assignments up to colour
    // renaming (set partitions of the k*|E| list slots with same-edge slots
    // separated) and decide k exactly. Sound because a colouring's breaking
    // status depends only on the equality pattern of its colours, so
    // renaming list colours preserves the existence of a breaking choice,
    // and colours outside the union of the lists never occur in one.
    bool canonical_search = false;
    int max_pattern_slots = 10; // k*|E| cap for the canonical enumeration
};

IndexBounds small_list_distinguishing_index_bounds(const Graph& g,
                                                   const BoundsOptions& options = {},
                                                   const EngineLimits& limits = {});

// Uniform-random k-subsets of the palette {"1",...,"<palette_size>"} per
// edge (and per vertex when requested). Fully deterministic under seed.
ListAssignment random_list_assignment(const Graph& g, int k, int palette_size, std::uint64_t seed,
                                      bool include_vertices = false);

} // namespace symbreak

#endif
