#include "symbreak/colouring.hpp"

#include <algorithm>
#include <stdexcept>

namespace symbreak {

void normalize_lists(ListAssignment& lists) {
    auto normalize = [](std::vector<Colour>& list) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (list.empty()) throw std::invalid_argument("empty colour list");
    };
    for (auto& list : lists.edge_lists) normalize(list);
    for (auto& list : lists.vertex_lists) normalize(list);
}

ListAssignment uniform_lists(const Graph& g, int k, bool include_vertices) {
    if (k < 1) throw std::invalid_argument("uniform list size must be positive");
    std::vector<Colour> tokens;
    tokens.reserve(k);
    for (int i = 1; i <= k; ++i) tokens.push_back(std::to_string(i));
    std::sort(tokens.begin(), tokens.end());
    ListAssignment lists;
    lists.edge_lists.assign(g.edges().size(), tokens);
    if (include_vertices) lists.vertex_lists.assign(g.vertex_count(), tokens);
    return lists;
}

void require_edge_lists(const Graph& g, const ListAssignment& lists, std::size_t min_size) {
    if (lists.edge_lists.size() != g.edges().size())
        throw std::invalid_argument("list assignment does not cover every edge");
    for (const auto& list : lists.edge_lists)
        if (list.size() < min_size)
            throw std::invalid_argument("edge list shorter than required size " +
                                        std::to_string(min_size));
}

void require_vertex_lists(const Graph& g, const ListAssignment& lists, std::size_t min_size) {
    if (lists.vertex_lists.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("list assignment does not cover every vertex");
    for (const auto& list : lists.vertex_lists)
        if (list.size() < min_size)
            throw std::invalid_argument("vertex list shorter than required size " +
                                        std::to_string(min_size));
}

void require_complete(const Graph& g, const EdgeColouring& c) {
    if (c.by_edge.size() != g.edges().size())
        throw std::invalid_argument("incomplete edge colouring");
}

void require_complete(const Graph& g, const TotalColouring& c) {
    require_complete(g, c.edges);
    if (c.vertices.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("incomplete vertex colouring");
}

Colour first_token_excluding(const std::vector<Colour>& list, std::span<const Colour> banned) {
    for (const Colour& t : list) {
        bool hit = false;
        for (const Colour& b : banned)
            if (t == b) { hit = true; break; }
        if (!hit) return t;
    }
    throw std::invalid_argument("colour list exhausted by exclusions");
}

bool respects_lists(const Graph& g, const ListAssignment& lists, const EdgeColouring& c) {
    require_complete(g, c);
    if (lists.edge_lists.size() != g.edges().size()) return false;
    for (std::size_t i = 0; i < c.by_edge.size(); ++i) {
        const auto& list = lists.edge_lists[i];
        if (!std::binary_search(list.begin(), list.end(), c.by_edge[i])) return false;
    }
    return true;
}

bool respects_lists(const Graph& g, const ListAssignment& lists, const TotalColouring& c) {
    if (!respects_lists(g, lists, c.edges)) return false;
    if (lists.vertex_lists.size() != c.vertices.size()) return false;
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        const auto& list = lists.vertex_lists[v];
        if (!std::binary_search(list.begin(), list.end(), c.vertices[v])) return false;
    }
    return true;
}

ListAssignment restrict_to_subgraph(const Graph& g, const ListAssignment& lists,
                                    const Graph& sub, const std::vector<int>& original_ids) {
    ListAssignment out;
    out.edge_lists.reserve(sub.edges().size());
    for (const Edge& e : sub.edges()) {
        const int idx = g.edge_index(original_ids[e.u], original_ids[e.v]);
        if (idx < 0) throw std::invalid_argument("subgraph edge missing from parent graph");
        out.edge_lists.push_back(lists.edge_lists[idx]);
    }
    if (lists.has_vertex_lists()) {
        out.vertex_lists.reserve(original_ids.size());
        for (int old_id : original_ids) out.vertex_lists.push_back(lists.vertex_lists[old_id]);
    }
    return out;
}

const char* to_string(CorrectionBranch b) {
    switch (b) {
        case CorrectionBranch::none: return "none";
        case CorrectionBranch::single_pink: return "single-pink";
        case CorrectionBranch::monochrome_star: return "monochrome-star";
        case CorrectionBranch::bichromatic_swap: return "bichromatic-swap";
        case CorrectionBranch::verified_fallback: return "verified-fallback";
    }
    return "unknown";
}

} // namespace symbreak
