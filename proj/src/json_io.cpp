#include "symbreak/json_io.hpp"

#include <stdexcept>

namespace symbreak {

using nlohmann::json;

namespace {

Colour colour_from_json(const json& j) {
    if (j.is_string()) return j.get<Colour>();
    return j.dump(); // numbers and the like keep a canonical text form
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

int edge_index_checked(const Graph& g, const json& item) {
    const int u = int_field(item, "u");
    const int v = int_field(item, "v");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v)
        throw std::invalid_argument("edge endpoints out of range");
    const int idx = g.edge_index(u, v);
    if (idx < 0)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not in the graph");
    return idx;
}

} // namespace

json permutation_to_json(const Permutation& p) { return json(p.image); }

json orbits_to_json(const OrbitPartition& orbits) {
    return json{{"root", orbits.root}, {"orbits", orbits.orbits}};
}

json report_to_json(const VerifierReport& report) {
    json j{{"ok", report.ok}, {"checked_count", report.checked_count}};
    if (report.witness) j["witness"] = permutation_to_json(*report.witness);
    return j;
}

json colouring_to_json(const Graph& g, const EdgeColouring& c) {
    require_complete(g, c);
    json edges = json::array();
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        edges.push_back(
            {{"u", g.edges()[i].u}, {"v", g.edges()[i].v}, {"color", c.by_edge[i]}});
    return json{{"edges", std::move(edges)}};
}

json colouring_to_json(const Graph& g, const TotalColouring& c) {
    require_complete(g, c);
    json j = colouring_to_json(g, c.edges);
    json vertices = json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        vertices.push_back({{"v", v}, {"color", c.vertices[v]}});
    j["vertices"] = std::move(vertices);
    return j;
}

EdgeColouring edge_colouring_from_json(const Graph& g, const json& j) {
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw std::invalid_argument("colouring needs an 'edges' array");
    EdgeColouring c;
    c.by_edge.assign(g.edges().size(), {});
    std::vector<char> seen(g.edges().size(), 0);
    for (const json& item : j.at("edges")) {
        const int idx = edge_index_checked(g, item);
        if (seen[idx]) throw std::invalid_argument("duplicate edge in colouring");
        if (!item.contains("color")) throw std::invalid_argument("edge entry lacks 'color'");
        seen[idx] = 1;
        c.by_edge[idx] = colour_from_json(item.at("color"));
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("colouring does not cover every edge");
    return c;
}

TotalColouring total_colouring_from_json(const Graph& g, const json& j) {
    TotalColouring c;
    c.edges = edge_colouring_from_json(g, j);
    if (!j.contains("vertices") || !j.at("vertices").is_array())
        throw std::invalid_argument("total colouring needs a 'vertices' array");
    c.vertices.assign(g.vertex_count(), {});
    std::vector<char> seen(g.vertex_count(), 0);
    for (const json& item : j.at("vertices")) {
        const int v = int_field(item, "v");
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
        if (seen[v]) throw std::invalid_argument("duplicate vertex in colouring");
        if (!item.contains("color")) throw std::invalid_argument("vertex entry lacks 'color'");
        seen[v] = 1;
        c.vertices[v] = colour_from_json(item.at("color"));
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("colouring does not cover every vertex");
    return c;
}

json lists_to_json(const Graph& g, const ListAssignment& lists) {
    json edges = json::array();
    for (std::size_t i = 0; i < lists.edge_lists.size(); ++i)
        edges.push_back(
            {{"u", g.edges()[i].u}, {"v", g.edges()[i].v}, {"list", lists.edge_lists[i]}});
    json j{{"edges", std::move(edges)}};
    if (lists.has_vertex_lists()) {
        json vertices = json::array();
        for (std::size_t v = 0; v < lists.vertex_lists.size(); ++v)
            vertices.push_back({{"v", static_cast<int>(v)}, {"list", lists.vertex_lists[v]}});
        j["vertices"] = std::move(vertices);
    }
    return j;
}

ListAssignment lists_from_json(const Graph& g, const json& j) {
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw std::invalid_argument("list assignment needs an 'edges' array");
    ListAssignment lists;
    lists.edge_lists.assign(g.edges().size(), {});
    std::vector<char> seen(g.edges().size(), 0);
    for (const json& item : j.at("edges")) {
        const int idx = edge_index_checked(g, item);
        if (seen[idx]) throw std::invalid_argument("duplicate edge in list assignment");
        if (!item.contains("list") || !item.at("list").is_array())
            throw std::invalid_argument("edge entry lacks a 'list' array");
        seen[idx] = 1;
        for (const json& t : item.at("list")) lists.edge_lists[idx].push_back(colour_from_json(t));
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("list assignment does not cover every edge");

    if (j.contains("vertices")) {
        lists.vertex_lists.assign(g.vertex_count(), {});
        std::vector<char> vseen(g.vertex_count(), 0);
        for (const json& item : j.at("vertices")) {
            const int v = int_field(item, "v");
            if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
            if (vseen[v]) throw std::invalid_argument("duplicate vertex in list assignment");
            if (!item.contains("list") || !item.at("list").is_array())
                throw std::invalid_argument("vertex entry lacks a 'list' array");
            vseen[v] = 1;
            for (const json& t : item.at("list"))
                lists.vertex_lists[v].push_back(colour_from_json(t));
        }
        for (char s : vseen)
            if (!s) throw std::invalid_argument("list assignment does not cover every vertex");
    }
    normalize_lists(lists);
    return lists;
}

json trace_to_json(const CorrectionTrace& trace) {
    json recoloured = json::array();
    for (const Recolouring& r : trace.recoloured)
        recoloured.push_back({{"u", r.edge.u},
                              {"v", r.edge.v},
                              {"before", r.before},
                              {"after", r.after}});
    json roles = json::object();
    if (trace.pink) roles["pink"] = *trace.pink;
    if (trace.blue) roles["blue"] = *trace.blue;
    if (trace.red) roles["red"] = *trace.red;
    json j{{"branch", to_string(trace.branch)},
           {"component", trace.component},
           {"recoloured", std::move(recoloured)},
           {"roles", std::move(roles)}};
    if (trace.root >= 0) j["root"] = trace.root;
    return j;
}

json index_result_to_json(const Graph& g, const SmallIndexResult& result) {
    return json{{"value", result.value},
                {"witness", colouring_to_json(g, result.witness)},
                {"exhausted_below", result.exhausted_below}};
}

json bounds_to_json(const Graph& g, const IndexBounds& bounds) {
    json j{{"lower", bounds.lower},
           {"upper", bounds.upper},
           {"upper_certificate", bounds.upper_method == UpperBoundMethod::constructive
                                     ? "constructive-theorem"
                                     : "exhaustive"}};
    if (bounds.lower_certificate) {
        j["lower_certificate"] = {
            {"assignment", lists_to_json(g, bounds.lower_certificate->assignment)},
            {"colourings_checked", bounds.lower_certificate->colourings_checked},
            {"adversarial", bounds.lower_certificate->adversarial}};
    }
    return j;
}

} // namespace symbreak
