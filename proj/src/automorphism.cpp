#include "symbreak/automorphism.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "symbreak/errors.hpp"

namespace symbreak {

namespace {

// Iterated degree refinement (1-WL). Returns a stable colour per vertex;
// automorphisms can only map a vertex to one of the same colour.
std::vector<int> refined_colours(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> colour(n, 0);
    for (int v = 0; v < n; ++v) colour[v] = g.degree(v);

    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.reserve(g.degree(v) + 1);
            s.push_back(colour[v]);
            for (int w : g.neighbours(v)) s.push_back(colour[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        std::vector<int> refreshed(n);
        for (const auto& [s, v] : sig) refreshed[v] = rank[s];
        if (refreshed == colour) break;
        colour = std::move(refreshed);
    }
    return colour;
}

struct Enumerator {
    const Graph& g;
    const EngineLimits& limits;
    int n;
    std::vector<std::uint64_t> adj_mask;
    std::vector<int> colour;
    std::vector<int> image;
    std::vector<char> used;
    std::vector<Permutation> out;

    Enumerator(const Graph& graph, const EngineLimits& lim) : g(graph), limits(lim) {
        n = g.vertex_count();
        adj_mask.assign(n, 0);
        for (const Edge& e : g.edges()) {
            adj_mask[e.u] |= std::uint64_t{1} << e.v;
            adj_mask[e.v] |= std::uint64_t{1} << e.u;
        }
        colour = refined_colours(g);
        image.assign(n, -1);
        used.assign(n, 0);
    }

    bool consistent(int v, int w) const {
        for (int u = 0; u < v; ++u) {
            const bool a = (adj_mask[v] >> u) & 1;
            const bool b = (adj_mask[w] >> image[u]) & 1;
            if (a != b) return false;
        }
        return true;
    }

    void run(int v) {
        if (v == n) {
            out.push_back(Permutation{image});
            if (out.size() > limits.max_group_size)
                throw size_limit_error("automorphism group exceeds the element cap of " +
                                       std::to_string(limits.max_group_size));
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || colour[w] != colour[v]) continue;
            if (!consistent(v, w)) continue;
            image[v] = w;
            used[w] = 1;
            run(v + 1);
            used[w] = 0;
            image[v] = -1;
        }
    }
};

} // namespace

std::vector<Permutation> enumerate_automorphisms(const Graph& g, const EngineLimits& limits) {
    const int n = g.vertex_count();
    if (n > limits.max_vertices)
        throw size_limit_error("graph order " + std::to_string(n) +
                               " exceeds the engine limit of " + std::to_string(limits.max_vertices));
    if (n > 64) throw size_limit_error("engine supports at most 64 vertices");
    if (n == 0) return {Permutation::identity(0)};

    Enumerator e(g, limits);
    // Candidates are tried in ascending order for each position, so the
    // output comes out lexicographically sorted by construction.
    e.run(0);
    assert(std::is_sorted(e.out.begin(), e.out.end()));
    assert(!e.out.empty() && e.out.front().is_identity());
    return std::move(e.out);
}

std::vector<Permutation> stabilizer_automorphisms(const Graph& g, int root,
                                                  const EngineLimits& limits) {
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("stabilizer root out of range");
    std::vector<Permutation> out;
    for (auto& p : enumerate_automorphisms(g, limits))
        if (p(root) == root) out.push_back(std::move(p));
    return out;
}

bool is_small(const Graph& g, const Permutation& p) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.adjacent(v, p(v))) return true;
    return false;
}

std::vector<Permutation> small_automorphisms(const Graph& g, const EngineLimits& limits) {
    std::vector<Permutation> out;
    for (auto& p : enumerate_automorphisms(g, limits))
        if (is_small(g, p)) out.push_back(std::move(p));
    return out;
}

namespace detail {

OrbitPartition orbits_from_stabilizer(const Graph& g, int root,
                                      const std::vector<Permutation>& stabilizer) {
    const std::vector<int> dist = bfs_distances(g, root);
    const int n = g.vertex_count();

    // Orbit representative per vertex of root's component: the minimum
    // vertex reachable through stabilizer images.
    std::vector<int> rep(n, -1);
    for (int v = 0; v < n; ++v) {
        if (dist[v] < 0 || rep[v] != -1) continue;
        std::vector<int> members;
        std::vector<char> seen(n, 0);
        members.push_back(v);
        seen[v] = 1;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (const Permutation& p : stabilizer) {
                const int w = p(members[i]);
                if (!seen[w]) {
                    seen[w] = 1;
                    members.push_back(w);
                }
            }
        std::sort(members.begin(), members.end());
        for (int w : members) rep[w] = members.front();
    }

    std::map<int, std::vector<int>> by_rep;
    for (int v = 0; v < n; ++v)
        if (dist[v] >= 0) by_rep[rep[v]].push_back(v);

    std::vector<std::vector<int>> orbits;
    orbits.reserve(by_rep.size());
    for (auto& [r, members] : by_rep) {
        for (int w : members)
            if (dist[w] != dist[members.front()])
                throw std::logic_error("orbit mixes BFS distances");
        orbits.push_back(std::move(members));
    }
    std::sort(orbits.begin(), orbits.end(), [&](const auto& a, const auto& b) {
        if (dist[a.front()] != dist[b.front()]) return dist[a.front()] < dist[b.front()];
        return a.front() < b.front();
    });

    if (orbits.empty() || orbits.front() != std::vector<int>{root})
        throw std::logic_error("stabilizer orbit of the root is not a singleton");
    return OrbitPartition{root, std::move(orbits)};
}

std::vector<Permutation> filter_colour_preserving(const Graph& g,
                                                  const std::vector<Permutation>& autos,
                                                  const EdgeColouring& c) {
    require_complete(g, c);
    std::vector<Permutation> out;
    for (const Permutation& p : autos) {
        bool preserved = true;
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const int j = g.edge_index(image_edge(p, g.edges()[i]));
            if (c.by_edge[i] != c.by_edge[j]) {
                preserved = false;
                break;
            }
        }
        if (preserved) out.push_back(p);
    }
    return out;
}

} // namespace detail

OrbitPartition vertex_orbits(const Graph& g, int root, const EngineLimits& limits) {
    return detail::orbits_from_stabilizer(g, root, stabilizer_automorphisms(g, root, limits));
}

std::vector<Permutation> colour_preserving_automorphisms(const Graph& g, const EdgeColouring& c,
                                                         const EngineLimits& limits) {
    return detail::filter_colour_preserving(g, enumerate_automorphisms(g, limits), c);
}

std::vector<Permutation> colour_preserving_automorphisms(const Graph& g, const TotalColouring& c,
                                                         const EngineLimits& limits) {
    require_complete(g, c);
    std::vector<Permutation> out;
    for (auto& p : colour_preserving_automorphisms(g, c.edges, limits)) {
        bool preserved = true;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (c.vertices[v] != c.vertices[p(v)]) {
                preserved = false;
                break;
            }
        if (preserved) out.push_back(std::move(p));
    }
    return out;
}

} // namespace symbreak
