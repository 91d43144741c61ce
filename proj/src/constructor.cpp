#include "symbreak/constructor.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "symbreak/errors.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/verifier.hpp"

namespace symbreak {

namespace {

void require_connected(const Graph& h) {
    if (h.vertex_count() == 0 || connected_components(h).size() != 1)
        throw std::invalid_argument("graph must be connected and nonempty");
}

bool is_k2(const Graph& h) { return h.vertex_count() == 2 && h.edge_count() == 1; }

bool is_cycle(const Graph& h) {
    if (h.vertex_count() < 3 || h.edge_count() != h.vertex_count()) return false;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) != 2) return false;
    return true;
}

// Edges of a path in walk order, starting from the smaller endpoint.
std::vector<int> path_edge_walk(const Graph& h) {
    std::vector<int> walk;
    if (h.edge_count() == 0) return walk;
    int start = -1;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == 1) {
            start = v;
            break;
        }
    if (start < 0) throw std::invalid_argument("graph is not a path");
    int prev = -1;
    int cur = start;
    while (true) {
        int next = -1;
        for (int w : h.neighbours(cur))
            if (w != prev) {
                next = w;
                break;
            }
        if (next < 0) break;
        walk.push_back(h.edge_index(cur, next));
        prev = cur;
        cur = next;
    }
    if (walk.size() != static_cast<std::size_t>(h.edge_count()))
        throw std::invalid_argument("graph is not a path");
    return walk;
}

void certify_rooted(const Graph& h, int root, const EdgeColouring& c, const EngineLimits& limits) {
    if (!breaks_all_small_rooted(h, root, c, limits).ok)
        throw std::logic_error("constructed colouring failed rooted verification");
}

} // namespace

EdgeColouring base_case_rooted_colouring(const Graph& h, int root, const ListAssignment& lists,
                                         const EngineLimits& limits) {
    require_connected(h);
    if (root < 0 || root >= h.vertex_count()) throw std::invalid_argument("root out of range");
    if (max_degree(h) > 2) throw std::invalid_argument("base case requires max degree <= 2");
    require_edge_lists(h, lists, 1);

    EdgeColouring c;
    c.by_edge.resize(h.edge_count());
    for (int i = 0; i < h.edge_count(); ++i) c.by_edge[i] = lists.edge_lists[i].front();

    if (is_cycle(h)) {
        // The stabilizer of root is generated by the reflection through it,
        // which swaps the two root-incident edges; give them distinct tokens.
        const auto& nb = h.neighbours(root);
        int e1 = h.edge_index(root, nb[0]);
        int e2 = h.edge_index(root, nb[1]);
        if (Edge{h.edges()[e2]} < Edge{h.edges()[e1]}) std::swap(e1, e2);
        if (lists.edge_lists[e1].size() < 2 || lists.edge_lists[e2].size() < 2)
            throw std::invalid_argument("cycle root edges need lists of size >= 2");
        const std::array<Colour, 1> banned{c.by_edge[e1]};
        c.by_edge[e2] = first_token_excluding(lists.edge_lists[e2], banned);
    }
    certify_rooted(h, root, c, limits);
    return c;
}

EdgeColouring degree_le2_component_colouring(const Graph& h, const ListAssignment& lists,
                                             const EngineLimits& limits) {
    require_connected(h);
    if (max_degree(h) > 2) throw std::invalid_argument("component max degree exceeds 2");
    if (is_k2(h)) throw std::invalid_argument("K2 admits no breaking colouring");

    EdgeColouring c;
    c.by_edge.resize(h.edge_count());

    if (is_cycle(h)) {
        require_edge_lists(h, lists, 3);
        // One edge gets a colour unique in the cycle, pinning it under any
        // preserved automorphism; its two neighbouring edges get distinct
        // tokens to kill the reflection through it.
        const int e0 = 0; // edges() is sorted, so index 0 is the lex-least edge
        const Edge base = h.edges()[e0];
        c.by_edge[e0] = lists.edge_lists[e0].front();
        const Colour& pinned = c.by_edge[e0];

        int at_v = -1, at_u = -1;
        for (int w : h.neighbours(base.v))
            if (w != base.u) at_v = h.edge_index(base.v, w);
        for (int w : h.neighbours(base.u))
            if (w != base.v) at_u = h.edge_index(base.u, w);

        const std::array<Colour, 1> avoid0{pinned};
        c.by_edge[at_v] = first_token_excluding(lists.edge_lists[at_v], avoid0);
        const std::array<Colour, 2> avoid01{pinned, c.by_edge[at_v]};
        c.by_edge[at_u] = first_token_excluding(lists.edge_lists[at_u], avoid01);
        for (int i = 0; i < h.edge_count(); ++i) {
            if (i == e0 || i == at_v || i == at_u) continue;
            c.by_edge[i] = first_token_excluding(lists.edge_lists[i], avoid0);
        }
    } else {
        require_edge_lists(h, lists, 2);
        for (int i = 0; i < h.edge_count(); ++i) c.by_edge[i] = lists.edge_lists[i].front();
        const int n = h.vertex_count();
        if (n % 2 == 0 && n >= 4) {
            // Even paths have one small automorphism: the reflection through
            // the central edge. Its neighbouring edges get distinct tokens.
            const auto walk = path_edge_walk(h);
            const int left = n / 2 - 2;
            const int right = n / 2;
            const std::array<Colour, 1> banned{c.by_edge[walk[left]]};
            c.by_edge[walk[right]] = first_token_excluding(lists.edge_lists[walk[right]], banned);
        }
    }
    if (!breaks_all_small(h, c, limits).ok)
        throw std::logic_error("degree <= 2 colouring failed verification");
    return c;
}

namespace {

// Recursive body of the rooted construction; K2 is allowed here (its root
// stabilizer is trivial, so any list choice works).
EdgeColouring lemma_recursive(const Graph& h, int root, const ListAssignment& lists,
                              const EngineLimits& limits) {
    if (max_degree(h) <= 2) return base_case_rooted_colouring(h, root, lists, limits);

    const auto autos = enumerate_automorphisms(h, limits);
    std::vector<Permutation> stabilizer;
    for (const Permutation& p : autos)
        if (p(root) == root) stabilizer.push_back(p);
    const OrbitPartition orbits = detail::orbits_from_stabilizer(h, root, stabilizer);
    const std::vector<int> dist = bfs_distances(h, root);
    const int degree_bound = max_degree(h);

    std::vector<int> orbit_of(h.vertex_count(), -1);
    for (std::size_t i = 0; i < orbits.orbits.size(); ++i)
        for (int v : orbits.orbits[i]) orbit_of[v] = static_cast<int>(i);

    std::vector<Colour> col(h.edge_count());
    std::vector<char> done(h.edge_count(), 0);
    auto set_colour = [&](int idx, const Colour& token) {
        if (done[idx]) throw std::logic_error("edge coloured twice in the orbit walk");
        col[idx] = token;
        done[idx] = 1;
    };

    for (std::size_t i = 1; i < orbits.orbits.size(); ++i) {
        const InducedSubgraph layer = induced_subgraph(h, orbits.orbits[i]);
        for (const auto& comp : connected_components(layer.graph)) {
            std::vector<int> members;
            members.reserve(comp.size());
            for (int nv : comp) members.push_back(layer.original_ids[nv]);
            const int comp_root = members.front();

            const InducedSubgraph part = induced_subgraph(h, members);
            if (part.graph.edge_count() > 0) {
                if (max_degree(part.graph) >= degree_bound)
                    throw std::logic_error("orbit component degree did not drop");
                const ListAssignment sub_lists =
                    restrict_to_subgraph(h, lists, part.graph, part.original_ids);
                const EdgeColouring sub_col = lemma_recursive(part.graph, 0, sub_lists, limits);
                for (int j = 0; j < part.graph.edge_count(); ++j) {
                    const Edge e = part.graph.edges()[j];
                    set_colour(h.edge_index(part.original_ids[e.u], part.original_ids[e.v]),
                               sub_col.by_edge[j]);
                }
            }

            // The component root's back edge towards the root gets the first
            // token of its list; every other back edge of the component must
            // avoid that token, making the component root recognizable.
            const int depth = dist[comp_root];
            int parent = -1;
            for (int w : h.neighbours(comp_root))
                if (dist[w] == depth - 1) {
                    parent = w;
                    break;
                }
            if (parent < 0) throw std::logic_error("orbit vertex has no parent edge");
            const int special = h.edge_index(comp_root, parent);
            const Colour blue = lists.edge_lists[special].front();
            set_colour(special, blue);
            const std::array<Colour, 1> banned{blue};
            for (int v : members)
                for (int w : h.neighbours(v)) {
                    if (orbit_of[w] >= static_cast<int>(i)) continue;
                    const int idx = h.edge_index(v, w);
                    if (idx == special) continue;
                    set_colour(idx, first_token_excluding(lists.edge_lists[idx], banned));
                }
        }
    }
    for (char flag : done)
        if (!flag) throw std::logic_error("orbit walk left an edge uncoloured");

    EdgeColouring c{std::move(col)};
    if (!detail::breaks_all_small_rooted(h, autos, root, c).ok)
        throw std::logic_error("rooted colouring failed verification");
    return c;
}

} // namespace

EdgeColouring lemma_rooted_colouring(const Graph& h, int root, const ListAssignment& lists,
                                     const EngineLimits& limits) {
    require_connected(h);
    if (is_k2(h)) throw std::invalid_argument("K2 is excluded from the rooted construction");
    if (root < 0 || root >= h.vertex_count()) throw std::invalid_argument("root out of range");
    require_edge_lists(h, lists, 2);
    return lemma_recursive(h, root, lists, limits);
}

namespace {

struct ComponentResult {
    EdgeColouring colouring;
    CorrectionTrace trace;
};

Edge original_edge(const std::vector<int>& ids, Edge local) {
    return make_edge(ids[local.u], ids[local.v]);
}

// Correction workflow for a connected component with max degree >= 3, in
// component-local vertex ids. The trace reports original ids.
ComponentResult colour_big_component(const Graph& H, const std::vector<int>& original_ids,
                                     const ListAssignment& lists, const EngineLimits& limits,
                                     const TheoremOptions& options) {
    const auto autos = enumerate_automorphisms(H, limits);

    int root = -1;
    for (int v = 0; v < H.vertex_count(); ++v)
        if (H.degree(v) >= 3) {
            root = v;
            break;
        }
    if (root < 0) throw std::logic_error("no vertex of degree >= 3 in a big component");
    const auto& root_nb = H.neighbours(root);

    // Reserve "pink" from the root's minimum incident edge, then colour
    // from the pink-free lists so that pink can later mark the root.
    const int pink_source = H.edge_index(root, root_nb[0]);
    const Colour pink = lists.edge_lists[pink_source].front();
    ListAssignment pink_free = lists;
    for (auto& list : pink_free.edge_lists) std::erase(list, pink);

    const EdgeColouring before = lemma_recursive(H, root, pink_free, limits);

    CorrectionTrace base_trace;
    base_trace.root = original_ids[root];
    base_trace.component = original_ids;
    base_trace.pink = pink;

    auto in_list = [&](int edge_idx, const Colour& t) {
        const auto& list = lists.edge_lists[edge_idx];
        return std::binary_search(list.begin(), list.end(), t);
    };

    std::optional<ComponentResult> chosen;

    // Branch: the rooted colouring already fixes the root.
    if (detail::root_is_fixed(H, autos, before, root)) {
        CorrectionTrace t = base_trace;
        t.branch = CorrectionBranch::none;
        chosen = ComponentResult{before, std::move(t)};
    }

    // Branch: recolour one root edge pink so the root becomes fixed.
    if (!chosen) {
        for (int w : root_nb) {
            const int idx = H.edge_index(root, w);
            if (!in_list(idx, pink)) continue;
            EdgeColouring cand = before;
            cand.by_edge[idx] = pink;
            if (detail::root_is_fixed(H, autos, cand, root)) {
                CorrectionTrace t = base_trace;
                t.branch = CorrectionBranch::single_pink;
                t.recoloured.push_back(
                    {original_edge(original_ids, H.edges()[idx]), before.by_edge[idx], pink});
                chosen = ComponentResult{std::move(cand), std::move(t)};
                break;
            }
        }
    }

    if (!chosen) {
        bool monochrome = true;
        const Colour& first_colour = before.by_edge[H.edge_index(root, root_nb[0])];
        for (int w : root_nb)
            if (before.by_edge[H.edge_index(root, w)] != first_colour) {
                monochrome = false;
                break;
            }

        if (monochrome) {
            // Branch: all root edges share one colour. The minimum edge goes
            // pink (pink belongs to its list by construction) and a second
            // edge leaves the shared colour, so the root ends up with a pink
            // and a third colour while its pink neighbour does not.
            EdgeColouring cand = before;
            CorrectionTrace t = base_trace;
            t.branch = CorrectionBranch::monochrome_star;
            t.blue = first_colour;
            cand.by_edge[pink_source] = pink;
            t.recoloured.push_back({original_edge(original_ids, H.edges()[pink_source]),
                                    before.by_edge[pink_source], pink});
            const int second = H.edge_index(root, root_nb[1]);
            const std::array<Colour, 2> banned{pink, first_colour};
            const Colour red = first_token_excluding(lists.edge_lists[second], banned);
            t.red = red;
            t.recoloured.push_back(
                {original_edge(original_ids, H.edges()[second]), before.by_edge[second], red});
            cand.by_edge[second] = red;
            chosen = ComponentResult{std::move(cand), std::move(t)};
        } else {
            // Branch: two root edges with distinct colours swap roles: ry
            // takes the colour of rx and rx goes pink. Prefer x, y inside one
            // orbit component with x its root.
            std::vector<Permutation> stabilizer;
            for (const Permutation& p : autos)
                if (p(root) == root) stabilizer.push_back(p);
            const OrbitPartition orbits = detail::orbits_from_stabilizer(H, root, stabilizer);
            std::vector<int> orbit_of(H.vertex_count(), -1);
            std::vector<int> comp_of(H.vertex_count(), -1);
            std::vector<int> comp_root_of(H.vertex_count(), -1);
            int comp_counter = 0;
            for (std::size_t i = 1; i < orbits.orbits.size(); ++i) {
                const InducedSubgraph layer = induced_subgraph(H, orbits.orbits[i]);
                for (const auto& comp : connected_components(layer.graph)) {
                    const int id = comp_counter++;
                    int comp_min = layer.original_ids[comp.front()];
                    for (int nv : comp) {
                        const int v = layer.original_ids[nv];
                        orbit_of[v] = static_cast<int>(i);
                        comp_of[v] = id;
                        comp_root_of[v] = comp_min;
                    }
                }
            }

            std::vector<std::pair<int, int>> candidates;
            auto eligible = [&](int x, int y) {
                return x != y && before.by_edge[H.edge_index(root, x)] !=
                                     before.by_edge[H.edge_index(root, y)];
            };
            for (int x : root_nb)
                for (int y : root_nb)
                    if (eligible(x, y) && comp_of[x] == comp_of[y] && orbit_of[x] == orbit_of[y] &&
                        comp_root_of[x] == x)
                        candidates.emplace_back(x, y);
            for (int x : root_nb)
                for (int y : root_nb)
                    if (eligible(x, y)) {
                        const auto pair = std::make_pair(x, y);
                        if (std::find(candidates.begin(), candidates.end(), pair) ==
                            candidates.end())
                            candidates.push_back(pair);
                    }

            for (const auto& [x, y] : candidates) {
                const int ex = H.edge_index(root, x);
                const int ey = H.edge_index(root, y);
                const Colour red = before.by_edge[ex];
                if (!in_list(ex, pink) || !in_list(ey, red)) continue;
                EdgeColouring cand = before;
                cand.by_edge[ey] = red;
                cand.by_edge[ex] = pink;
                if (detail::breaks_all_small(H, autos, cand).ok) {
                    CorrectionTrace t = base_trace;
                    t.branch = CorrectionBranch::bichromatic_swap;
                    t.red = red;
                    t.recoloured.push_back(
                        {original_edge(original_ids, H.edges()[ey]), before.by_edge[ey], red});
                    t.recoloured.push_back(
                        {original_edge(original_ids, H.edges()[ex]), before.by_edge[ex], pink});
                    chosen = ComponentResult{std::move(cand), std::move(t)};
                    break;
                }
            }
        }
    }

    // Every branch outcome must pass the unrooted verifier; otherwise fall
    // through to the verified search.
    if (chosen && !detail::breaks_all_small(H, autos, chosen->colouring).ok) chosen.reset();

    if (!chosen) {
        std::cerr << "symbreak: correction fallback engaged on the component rooted at vertex "
                  << original_ids[root] << "\n";
        std::vector<int> incident;
        for (int w : root_nb) incident.push_back(H.edge_index(root, w));
        std::sort(incident.begin(), incident.end());

        auto try_candidate = [&](EdgeColouring cand) -> bool {
            if (!detail::breaks_all_small(H, autos, cand).ok) return false;
            CorrectionTrace t = base_trace;
            t.branch = CorrectionBranch::verified_fallback;
            for (int i = 0; i < H.edge_count(); ++i)
                if (cand.by_edge[i] != before.by_edge[i])
                    t.recoloured.push_back({original_edge(original_ids, H.edges()[i]),
                                            before.by_edge[i], cand.by_edge[i]});
            chosen = ComponentResult{std::move(cand), std::move(t)};
            return true;
        };

        bool found = try_candidate(before);
        for (std::size_t a = 0; !found && a < incident.size(); ++a)
            for (const Colour& t : lists.edge_lists[incident[a]]) {
                if (t == before.by_edge[incident[a]]) continue;
                EdgeColouring cand = before;
                cand.by_edge[incident[a]] = t;
                if ((found = try_candidate(std::move(cand)))) break;
            }
        for (std::size_t a = 0; !found && a < incident.size(); ++a)
            for (std::size_t b = a + 1; !found && b < incident.size(); ++b)
                for (const Colour& ta : lists.edge_lists[incident[a]]) {
                    if (found) break;
                    if (ta == before.by_edge[incident[a]]) continue;
                    for (const Colour& tb : lists.edge_lists[incident[b]]) {
                        if (tb == before.by_edge[incident[b]]) continue;
                        EdgeColouring cand = before;
                        cand.by_edge[incident[a]] = ta;
                        cand.by_edge[incident[b]] = tb;
                        if ((found = try_candidate(std::move(cand)))) break;
                    }
                }

        if (!found) {
            auto witness =
                exists_breaking_colouring(H, lists, OracleOptions{options.fallback_budget}, limits);
            if (!witness)
                throw std::logic_error(
                    "component admits no breaking colouring from 3-lists; constructive "
                    "guarantee violated");
            try_candidate(std::move(*witness));
        }
    }

    const CorrectionBranch branch = chosen->trace.branch;
    if (branch == CorrectionBranch::single_pink || branch == CorrectionBranch::monochrome_star ||
        branch == CorrectionBranch::bichromatic_swap) {
        int pink_edges = 0;
        for (const Colour& t : chosen->colouring.by_edge)
            if (t == pink) ++pink_edges;
        if (pink_edges != 1) throw std::logic_error("pink is not unique after the correction");
    }
    if (!detail::breaks_all_small(H, autos, chosen->colouring).ok)
        throw std::logic_error("component colouring failed verification");
    return std::move(*chosen);
}

} // namespace

TheoremResult theorem_edge_colouring(const Graph& g, const ListAssignment& lists,
                                     const EngineLimits& limits, const TheoremOptions& options) {
    require_edge_lists(g, lists, 3);
    const auto components = connected_components(g);
    for (const auto& comp : components)
        if (comp.size() == 2 && g.adjacent(comp[0], comp[1]))
            throw std::invalid_argument(
                "graph has a K2 component; the construction needs a graph without a K2 "
                "component");

    TheoremResult result;
    result.colouring.by_edge.resize(g.edge_count());
    for (const auto& comp : components) {
        const InducedSubgraph sub = induced_subgraph(g, comp);
        CorrectionTrace trace;
        trace.component = comp;
        if (sub.graph.edge_count() > 0) {
            const ListAssignment sub_lists =
                restrict_to_subgraph(g, lists, sub.graph, sub.original_ids);
            EdgeColouring local;
            if (max_degree(sub.graph) <= 2) {
                local = degree_le2_component_colouring(sub.graph, sub_lists, limits);
            } else {
                ComponentResult cr =
                    colour_big_component(sub.graph, sub.original_ids, sub_lists, limits, options);
                local = std::move(cr.colouring);
                trace = std::move(cr.trace);
            }
            for (int j = 0; j < sub.graph.edge_count(); ++j) {
                const Edge e = sub.graph.edges()[j];
                result.colouring
                    .by_edge[g.edge_index(sub.original_ids[e.u], sub.original_ids[e.v])] =
                    local.by_edge[j];
            }
        }
        result.traces.push_back(std::move(trace));
    }

    if (!respects_lists(g, lists, result.colouring))
        throw std::logic_error("output strays from its lists");
    if (!breaks_all_small(g, result.colouring, limits).ok)
        throw std::logic_error("edge colouring failed final verification");
    return result;
}

TotalColouring total_colouring(const Graph& g, const ListAssignment& lists,
                               const EngineLimits& limits) {
    require_edge_lists(g, lists, 2);
    require_vertex_lists(g, lists, 2);
    const auto components = connected_components(g);
    for (const auto& comp : components)
        if (comp.size() == 2 && g.adjacent(comp[0], comp[1]))
            throw std::invalid_argument(
                "graph has a K2 component; the construction needs a graph without a K2 "
                "component");

    TotalColouring tc;
    tc.edges.by_edge.resize(g.edge_count());
    tc.vertices.resize(g.vertex_count());

    for (const auto& comp : components) {
        const InducedSubgraph sub = induced_subgraph(g, comp);
        const ListAssignment sub_lists = restrict_to_subgraph(g, lists, sub.graph, sub.original_ids);
        if (sub.graph.edge_count() > 0) {
            const EdgeColouring local = lemma_recursive(sub.graph, 0, sub_lists, limits);
            for (int j = 0; j < sub.graph.edge_count(); ++j) {
                const Edge e = sub.graph.edges()[j];
                tc.edges.by_edge[g.edge_index(sub.original_ids[e.u], sub.original_ids[e.v])] =
                    local.by_edge[j];
            }
        }
        // The component root keeps the first token of its list; everyone
        // else avoids it, so the root's vertex colour is unique here.
        const Colour root_colour = sub_lists.vertex_lists[0].front();
        tc.vertices[comp[0]] = root_colour;
        const std::array<Colour, 1> banned{root_colour};
        for (std::size_t i = 1; i < comp.size(); ++i)
            tc.vertices[comp[i]] = first_token_excluding(sub_lists.vertex_lists[i], banned);
        for (std::size_t i = 1; i < comp.size(); ++i)
            if (tc.vertices[comp[i]] == root_colour)
                throw std::logic_error("component root colour is not unique");
    }

    if (!respects_lists(g, lists, tc)) throw std::logic_error("output strays from its lists");
    if (!breaks_all_small_total(g, tc, limits).ok)
        throw std::logic_error("total colouring failed final verification");
    return tc;
}

} // namespace symbreak
