#ifndef SYMBREAK_AUTOMORPHISM_HPP
#define SYMBREAK_AUTOMORPHISM_HPP

#include <cstdint>
#include <vector>

#include "symbreak/colouring.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"

namespace symbreak {

// Hard caps for group materialization. Exceeding either raises
// size_limit_error; nothing is ever silently truncated.
struct EngineLimits {
    int max_vertices = 12;
    std::uint64_t max_group_size = 1'000'000;
};

// All automorphisms of g, each exactly once, sorted lexicographically by
// image array (so the identity comes first). Backtracking over partial
// images, pruned by iterated degree refinement and adjacency consistency.
std::vector<Permutation> enumerate_automorphisms(const Graph& g, const EngineLimits& limits = {});

// Subset of enumerate_automorphisms(g) fixing root.
std::vector<Permutation> stabilizer_automorphisms(const Graph& g, int root,
                                                  const EngineLimits& limits = {});

// True iff some vertex is mapped to one of its neighbours.
bool is_small(const Graph& g, const Permutation& p);

std::vector<Permutation> small_automorphisms(const Graph& g, const EngineLimits& limits = {});

// Orbits of the stabilizer of root, restricted to root's component, ordered
// by BFS distance from root with ties broken by smallest member. orbits[0]
// is always {root}.
struct OrbitPartition {
    int root = 0;
    std::vector<std::vector<int>> orbits;
};

OrbitPartition vertex_orbits(const Graph& g, int root, const EngineLimits& limits = {});

std::vector<Permutation> colour_preserving_automorphisms(const Graph& g, const EdgeColouring& c,
                                                         const EngineLimits& limits = {});
std::vector<Permutation> colour_preserving_automorphisms(const Graph& g, const TotalColouring& c,
                                                         const EngineLimits& limits = {});

namespace detail {

// Filters over a precomputed automorphism list; used by callers that reuse
// one enumeration across many checks.
std::vector<Permutation> filter_colour_preserving(const Graph& g,
                                                  const std::vector<Permutation>& autos,
                                                  const EdgeColouring& c);
OrbitPartition orbits_from_stabilizer(const Graph& g, int root,
                                      const std::vector<Permutation>& stabilizer);

} // namespace detail

} // namespace symbreak

#endif
