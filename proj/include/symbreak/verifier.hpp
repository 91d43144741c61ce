#ifndef SYMBREAK_VERIFIER_HPP
#define SYMBREAK_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "symbreak/automorphism.hpp"
#include "symbreak/colouring.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"

namespace symbreak {

// Result of a breaking check. When ok is false the witness is a small
// automorphism (the first in lexicographic order) preserving the colouring.
// checked_count is the number of small automorphisms examined.
struct VerifierReport {
    bool ok = true;
    std::optional<Permutation> witness;
    std::uint64_t checked_count = 0;
};

bool preserves_edge_colouring(const Graph& g, const Permutation& p, const EdgeColouring& c);
bool preserves_total_colouring(const Graph& g, const Permutation& p, const TotalColouring& c);

// The verifier always enumerates the automorphisms of the whole (possibly
// disconnected) graph; it shares no shortcut with the constructive side.
VerifierReport breaks_all_small(const Graph& g, const EdgeColouring& c,
                                const EngineLimits& limits = {});
VerifierReport breaks_all_small_rooted(const Graph& g, int root, const EdgeColouring& c,
                                       const EngineLimits& limits = {});
VerifierReport breaks_all_small_total(const Graph& g, const TotalColouring& c,
                                      const EngineLimits& limits = {});

// True iff every colour-preserving automorphism fixes root.
bool root_is_fixed(const Graph& g, const EdgeColouring& c, int root,
                   const EngineLimits& limits = {});

namespace detail {

// Variants over a precomputed automorphism list of g.
VerifierReport breaks_all_small(const Graph& g, const std::vector<Permutation>& autos,
                                const EdgeColouring& c);
VerifierReport breaks_all_small_rooted(const Graph& g, const std::vector<Permutation>& autos,
                                       int root, const EdgeColouring& c);
bool root_is_fixed(const Graph& g, const std::vector<Permutation>& autos, const EdgeColouring& c,
                   int root);

} // namespace detail

} // namespace symbreak

#endif
