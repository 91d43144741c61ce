#include "symbreak/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace symbreak {

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (image[v] != v) return false;
    return true;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.image.assign(image.size(), 0);
    for (int v = 0; v < size(); ++v) p.image[image[v]] = v;
    return p;
}

bool is_valid_permutation(const Permutation& p, int n) {
    if (p.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (int x : p.image) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (!is_valid_permutation(p, g.vertex_count())) return false;
    for (const Edge& e : g.edges())
        if (!g.adjacent(p(e.u), p(e.v))) return false;
    // A bijection mapping every edge to an edge on a finite graph maps the
    // edge set onto itself, so the reverse direction is implied.
    return true;
}

Edge image_edge(const Permutation& p, Edge e) { return make_edge(p(e.u), p(e.v)); }

} // namespace symbreak
