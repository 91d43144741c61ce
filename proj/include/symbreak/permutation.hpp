#ifndef SYMBREAK_PERMUTATION_HPP
#define SYMBREAK_PERMUTATION_HPP

#include <compare>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

// Vertex bijection in image form: image[v] is where v goes.
struct Permutation {
    std::vector<int> image;

    int size() const noexcept { return static_cast<int>(image.size()); }
    int operator()(int v) const { return image[static_cast<std::size_t>(v)]; }
    bool is_identity() const;

    static Permutation identity(int n);
    Permutation inverse() const;

    auto operator<=>(const Permutation&) const = default;
};

bool is_valid_permutation(const Permutation& p, int n);

// Adjacency preservation check: uv in E <=> p(u)p(v) in E.
bool is_automorphism(const Graph& g, const Permutation& p);

Edge image_edge(const Permutation& p, Edge e);

} // namespace symbreak

#endif
