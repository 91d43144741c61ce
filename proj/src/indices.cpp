#include "symbreak/indices.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "symbreak/constructor.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/verifier.hpp"

namespace symbreak {

namespace {

void reject_k2_components(const Graph& g) {
    for (const auto& comp : connected_components(g))
        if (comp.size() == 2 && g.adjacent(comp[0], comp[1]))
            throw std::invalid_argument(
                "graph has a K2 component; its swap preserves every edge colouring, so the "
                "index is only defined for graphs without a K2 component");
}

// Small automorphisms as edge permutations plus interned list tokens; the
// inner search loop runs on integers only.
struct SearchSpace {
    std::vector<std::vector<int>> edge_perms;  // per small automorphism
    std::vector<std::vector<int>> token_ids;   // per edge, parallel to its list
    std::vector<const std::vector<Colour>*> lists;

    SearchSpace(const Graph& g, const std::vector<Permutation>& smalls,
                const ListAssignment& assignment) {
        for (const Permutation& p : smalls) {
            std::vector<int> perm(g.edges().size());
            for (std::size_t i = 0; i < g.edges().size(); ++i)
                perm[i] = g.edge_index(image_edge(p, g.edges()[i]));
            edge_perms.push_back(std::move(perm));
        }
        std::map<Colour, int> intern;
        for (const auto& list : assignment.edge_lists)
            for (const Colour& t : list) intern.emplace(t, 0);
        int next = 0;
        for (auto& [t, id] : intern) id = next++;
        for (const auto& list : assignment.edge_lists) {
            std::vector<int> ids;
            ids.reserve(list.size());
            for (const Colour& t : list) ids.push_back(intern[t]);
            token_ids.push_back(std::move(ids));
            lists.push_back(&list);
        }
    }
};

std::uint64_t checked_product(const ListAssignment& lists, std::uint64_t budget) {
    std::uint64_t product = 1;
    for (const auto& list : lists.edge_lists) {
        product *= list.size();
        if (product > budget)
            throw budget_error("colouring space exceeds the search budget of " +
                               std::to_string(budget));
    }
    return product;
}

// Core exhaustive search; returns the choice vector of the first breaking
// colouring in lexicographic token order, and reports how many candidates
// were examined.
std::optional<std::vector<int>> search_breaking(const SearchSpace& space, std::uint64_t* examined) {
    const std::size_t m = space.token_ids.size();
    std::vector<int> choice(m, 0);
    std::vector<int> tok(m);
    if (examined) *examined = 0;
    while (true) {
        for (std::size_t i = 0; i < m; ++i) tok[i] = space.token_ids[i][choice[i]];
        if (examined) ++*examined;
        bool some_preserved = false;
        for (const auto& perm : space.edge_perms) {
            bool preserved = true;
            for (std::size_t i = 0; i < m; ++i)
                if (tok[i] != tok[perm[i]]) {
                    preserved = false;
                    break;
                }
            if (preserved) {
                some_preserved = true;
                break;
            }
        }
        if (!some_preserved) return choice;
        // advance odometer, last edge fastest
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (++choice[i] < static_cast<int>(space.token_ids[i].size())) break;
            choice[i] = 0;
            if (i == 0) return std::nullopt;
        }
        if (m == 0) return std::nullopt;
    }
}

std::optional<EdgeColouring> exists_breaking_with(const Graph& g,
                                                  const std::vector<Permutation>& smalls,
                                                  const ListAssignment& lists,
                                                  const OracleOptions& options,
                                                  std::uint64_t* examined) {
    checked_product(lists, options.budget);
    SearchSpace space(g, smalls, lists);
    auto choice = search_breaking(space, examined);
    if (!choice) return std::nullopt;
    EdgeColouring c;
    c.by_edge.reserve(lists.edge_lists.size());
    for (std::size_t i = 0; i < lists.edge_lists.size(); ++i)
        c.by_edge.push_back(lists.edge_lists[i][(*choice)[i]]);
    return c;
}

} // namespace

std::optional<EdgeColouring> exists_breaking_colouring(const Graph& g, const ListAssignment& lists,
                                                       const OracleOptions& options,
                                                       const EngineLimits& limits) {
    require_edge_lists(g, lists, 1);
    const auto smalls = small_automorphisms(g, limits);
    auto found = exists_breaking_with(g, smalls, lists, options, nullptr);
    if (found && !breaks_all_small(g, *found, limits).ok)
        throw std::logic_error("oracle witness failed re-verification");
    return found;
}

SmallIndexResult small_distinguishing_index(const Graph& g, const OracleOptions& options,
                                            const EngineLimits& limits) {
    reject_k2_components(g);
    const auto smalls = small_automorphisms(g, limits);
    const int m = g.edge_count();

    SmallIndexResult result;
    std::uint64_t failed_at_prev = 0;
    // A colouring with all edges distinct is breaking when no component is
    // K2, so k never needs to exceed |E|.
    for (int k = 1; k <= std::max(1, m); ++k) {
        const ListAssignment uniform = uniform_lists(g, k);
        std::uint64_t examined = 0;
        auto found = exists_breaking_with(g, smalls, uniform, options, &examined);
        if (found) {
            result.value = k;
            result.witness = std::move(*found);
            result.exhausted_below = failed_at_prev;
            if (!breaks_all_small(g, result.witness, limits).ok)
                throw std::logic_error("index witness failed re-verification");
            return result;
        }
        failed_at_prev = examined;
    }
    throw std::logic_error("no breaking colouring up to |E| colours; rainbow bound violated");
}

namespace {

// Enumerates list assignments of size k up to colour renaming: set
// partitions (restricted growth strings) of the k*|E| list slots in which
// two slots of one edge never share a block. Calls fn for each assignment;
// fn returning false stops the enumeration early.
template <typename Fn>
bool canonical_assignments_rec(const Graph& g, int k, int s, int max_used, std::vector<int>& block,
                               Fn& fn) {
    const int slots = g.edge_count() * k;
    if (s == slots) {
        ListAssignment lists;
        lists.edge_lists.assign(g.edge_count(), {});
        for (int t = 0; t < slots; ++t)
            lists.edge_lists[t / k].push_back(std::to_string(block[t] + 1));
        normalize_lists(lists);
        return fn(static_cast<const ListAssignment&>(lists));
    }
    const int edge_start = (s / k) * k;
    for (int b = 0; b <= max_used + 1; ++b) {
        bool clash = false;
        for (int t = edge_start; t < s; ++t)
            if (block[t] == b) {
                clash = true;
                break;
            }
        if (clash) continue;
        block[s] = b;
        if (!canonical_assignments_rec(g, k, s + 1, std::max(max_used, b), block, fn)) return false;
    }
    return true;
}

template <typename Fn>
void for_each_canonical_assignment(const Graph& g, int k, Fn&& fn) {
    std::vector<int> block(static_cast<std::size_t>(g.edge_count()) * k, 0);
    if (block.empty()) {
        ListAssignment empty;
        fn(static_cast<const ListAssignment&>(empty));
        return;
    }
    canonical_assignments_rec(g, k, 0, -1, block, fn);
}

} // namespace

IndexBounds small_list_distinguishing_index_bounds(const Graph& g, const BoundsOptions& options,
                                                   const EngineLimits& limits) {
    reject_k2_components(g);
    const auto smalls = small_automorphisms(g, limits);
    const OracleOptions oracle{options.budget};

    IndexBounds bounds;
    if (smalls.empty()) {
        // Nothing to break: any colouring from any lists works.
        bounds.lower = 1;
        bounds.upper = 1;
        bounds.upper_method = UpperBoundMethod::exhaustive;
        return bounds;
    }

    const SmallIndexResult uniform = small_distinguishing_index(g, oracle, limits);
    bounds.lower = uniform.value;
    if (uniform.value > 1) {
        LowerBoundCertificate cert;
        cert.assignment = uniform_lists(g, uniform.value - 1);
        cert.colourings_checked = uniform.exhausted_below;
        cert.adversarial = false;
        bounds.lower_certificate = cert;
    }
    bounds.upper = 3;
    bounds.upper_method = UpperBoundMethod::constructive;
    if (bounds.lower > bounds.upper)
        throw std::logic_error("lower bound exceeds the constructive upper bound");

    if (options.canonical_search) {
        for (int k = bounds.lower; k < 3; ++k) {
            if (static_cast<long>(k) * g.edge_count() > options.max_pattern_slots) break;
            std::optional<LowerBoundCertificate> defeat;
            for_each_canonical_assignment(g, k, [&](const ListAssignment& lists) {
                std::uint64_t examined = 0;
                if (!exists_breaking_with(g, smalls, lists, oracle, &examined)) {
                    defeat = LowerBoundCertificate{lists, examined, true};
                    return false;
                }
                return true;
            });
            if (defeat) {
                bounds.lower = k + 1;
                bounds.lower_certificate = std::move(defeat);
            } else {
                bounds.upper = k;
                bounds.upper_method = UpperBoundMethod::exhaustive;
                break;
            }
        }
    }

    if (bounds.upper_method == UpperBoundMethod::constructive && g.edge_count() > 0) {
        // Spot-check the constructive certificate on a few random 3-list
        // assignments; theorem_edge_colouring verifies its own output.
        for (std::uint64_t seed : {1u, 2u, 3u})
            theorem_edge_colouring(g, random_list_assignment(g, 3, 9, seed), limits);
    }
    if (bounds.lower > bounds.upper)
        throw std::logic_error("index bounds crossed");
    return bounds;
}

namespace {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
    // rejection sampling keeps the draw unbiased and reproducible
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

std::vector<Colour> random_subset(std::mt19937_64& rng, int k, int palette_size) {
    std::vector<int> pool(palette_size);
    for (int i = 0; i < palette_size; ++i) pool[i] = i + 1;
    for (int j = 0; j < k; ++j) {
        const auto pick = j + static_cast<int>(bounded_draw(rng, palette_size - j));
        std::swap(pool[j], pool[pick]);
    }
    std::vector<Colour> out;
    out.reserve(k);
    for (int j = 0; j < k; ++j) out.push_back(std::to_string(pool[j]));
    return out;
}

} // namespace

ListAssignment random_list_assignment(const Graph& g, int k, int palette_size, std::uint64_t seed,
                                      bool include_vertices) {
    if (k < 1) throw std::invalid_argument("list size must be positive");
    if (palette_size < k) throw std::invalid_argument("palette smaller than the list size");
    std::mt19937_64 rng(seed);
    ListAssignment lists;
    lists.edge_lists.reserve(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        lists.edge_lists.push_back(random_subset(rng, k, palette_size));
    if (include_vertices) {
        lists.vertex_lists.reserve(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            lists.vertex_lists.push_back(random_subset(rng, k, palette_size));
    }
    normalize_lists(lists);
    return lists;
}

} // namespace symbreak
