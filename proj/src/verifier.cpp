#include "symbreak/verifier.hpp"

#include <stdexcept>

namespace symbreak {

bool preserves_edge_colouring(const Graph& g, const Permutation& p, const EdgeColouring& c) {
    require_complete(g, c);
    if (!is_valid_permutation(p, g.vertex_count()))
        throw std::invalid_argument("permutation does not match the graph order");
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const int j = g.edge_index(image_edge(p, g.edges()[i]));
        if (j < 0) return false; // not an automorphism at all
        if (c.by_edge[i] != c.by_edge[j]) return false;
    }
    return true;
}

bool preserves_total_colouring(const Graph& g, const Permutation& p, const TotalColouring& c) {
    require_complete(g, c);
    if (!preserves_edge_colouring(g, p, c.edges)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.vertices[v] != c.vertices[p(v)]) return false;
    return true;
}

namespace detail {

VerifierReport breaks_all_small(const Graph& g, const std::vector<Permutation>& autos,
                                const EdgeColouring& c) {
    require_complete(g, c);
    VerifierReport report;
    for (const Permutation& p : autos) {
        if (!is_small(g, p)) continue;
        ++report.checked_count;
        if (preserves_edge_colouring(g, p, c)) {
            report.ok = false;
            report.witness = p;
            return report;
        }
    }
    return report;
}

VerifierReport breaks_all_small_rooted(const Graph& g, const std::vector<Permutation>& autos,
                                       int root, const EdgeColouring& c) {
    require_complete(g, c);
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("verification root out of range");
    VerifierReport report;
    for (const Permutation& p : autos) {
        if (p(root) != root || !is_small(g, p)) continue;
        ++report.checked_count;
        if (preserves_edge_colouring(g, p, c)) {
            report.ok = false;
            report.witness = p;
            return report;
        }
    }
    return report;
}

bool root_is_fixed(const Graph& g, const std::vector<Permutation>& autos, const EdgeColouring& c,
                   int root) {
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("root out of range");
    for (const Permutation& p : detail::filter_colour_preserving(g, autos, c))
        if (p(root) != root) return false;
    return true;
}

} // namespace detail

VerifierReport breaks_all_small(const Graph& g, const EdgeColouring& c,
                                const EngineLimits& limits) {
    return detail::breaks_all_small(g, enumerate_automorphisms(g, limits), c);
}

VerifierReport breaks_all_small_rooted(const Graph& g, int root, const EdgeColouring& c,
                                       const EngineLimits& limits) {
    return detail::breaks_all_small_rooted(g, enumerate_automorphisms(g, limits), root, c);
}

VerifierReport breaks_all_small_total(const Graph& g, const TotalColouring& c,
                                      const EngineLimits& limits) {
    require_complete(g, c);
    VerifierReport report;
    for (const Permutation& p : enumerate_automorphisms(g, limits)) {
        if (!is_small(g, p)) continue;
        ++report.checked_count;
        if (preserves_total_colouring(g, p, c)) {
            report.ok = false;
            report.witness = p;
            return report;
        }
    }
    return report;
}

bool root_is_fixed(const Graph& g, const EdgeColouring& c, int root, const EngineLimits& limits) {
    return detail::root_is_fixed(g, enumerate_automorphisms(g, limits), c, root);
}

} // namespace symbreak
