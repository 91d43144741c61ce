#include "symbreak/graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace symbreak {

Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (a > b) std::swap(a, b);
    return Edge{a, b};
}

Graph::Graph(int n, std::vector<Edge> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (Edge& e : edge_list) {
        if (e.u == e.v) throw std::invalid_argument("loop edge at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());

    row_start_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) row_start_[e.u + 1]++;
    for (int u = 0; u < n_; ++u) row_start_[u + 1] += row_start_[u];
}

const std::vector<int>& Graph::neighbours(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbours(v).size()); }

bool Graph::adjacent(int u, int v) const {
    const auto& row = neighbours(u);
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    return std::binary_search(row.begin(), row.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_ || u == v) return -1;
    auto first = edges_.begin() + row_start_[u];
    auto last = edges_.begin() + row_start_[u + 1];
    auto it = std::lower_bound(first, last, Edge{u, v});
    if (it == last || !(*it == Edge{u, v})) return -1;
    return static_cast<int>(it - edges_.begin());
}

namespace {

constexpr int kG6Offset = 63;
constexpr int kG6MaxOrder = 62;

} // namespace

Graph parse_graph6(std::string_view text) {
    // Strip the optional ">>graph6<<" prefix and trailing whitespace.
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty graph6 string");

    const unsigned char head = static_cast<unsigned char>(text[0]);
    if (head < kG6Offset || head > 126)
        throw std::invalid_argument("malformed graph6 header byte");
    if (head == 126)
        throw std::invalid_argument("graph6 long-order forms are not supported (n must be <= 62)");
    const int n = head - kG6Offset;
    if (n == 0) throw std::invalid_argument("graph6 order must be positive");

    const long bits = static_cast<long>(n) * (n - 1) / 2;
    const long payload_len = (bits + 5) / 6;
    if (static_cast<long>(text.size()) - 1 != payload_len)
        throw std::invalid_argument("graph6 payload length mismatch");

    std::vector<Edge> edges;
    long bit = 0;
    for (long i = 0; i < payload_len; ++i) {
        const unsigned char c = static_cast<unsigned char>(text[1 + i]);
        if (c < kG6Offset || c > 126)
            throw std::invalid_argument("graph6 payload character out of range");
        const int block = c - kG6Offset;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (block >> b) & 1;
            if (bit >= bits) {
                if (set) throw std::invalid_argument("graph6 nonzero padding bits");
                continue;
            }
            if (set) {
                // bit index -> pair (col, row): bits run column-major over
                // the upper triangle, column v lists rows 0..v-1.
                long k = bit;
                int col = 1;
                while (k >= col) { k -= col; ++col; }
                edges.push_back(Edge{static_cast<int>(k), col});
            }
        }
    }
    return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || n > kG6MaxOrder)
        throw std::invalid_argument("graph6 encoding supports 1 <= n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Offset));
    const long bits = static_cast<long>(n) * (n - 1) / 2;
    std::vector<bool> bitmap(static_cast<std::size_t>(bits), false);
    for (const Edge& e : g.edges()) {
        const long pos = static_cast<long>(e.v) * (e.v - 1) / 2 + e.u;
        bitmap[static_cast<std::size_t>(pos)] = true;
    }
    for (long i = 0; i < bits; i += 6) {
        int block = 0;
        for (int b = 0; b < 6 && i + b < bits; ++b)
            if (bitmap[static_cast<std::size_t>(i + b)]) block |= 1 << (5 - b);
        out.push_back(static_cast<char>(block + kG6Offset));
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<Edge> edges;
    int declared_n = -1;
    int max_id = -1;
    bool first_content_line = true;

    auto parse_int = [](const std::string& tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("non-integer token '" + tok + "' in edge list");
        return value;
    };

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank line
        if (!(ls >> b) || (ls >> extra))
            throw std::invalid_argument("edge list line must have exactly two tokens: '" + line + "'");
        if (first_content_line && a == "n") {
            declared_n = parse_int(b);
            if (declared_n < 0) throw std::invalid_argument("declared vertex count is negative");
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        const int u = parse_int(a);
        const int v = parse_int(b);
        if (u < 0 || v < 0) throw std::invalid_argument("negative vertex id in edge list");
        if (u == v) throw std::invalid_argument("loop line '" + line + "' in edge list");
        edges.push_back(make_edge(u, v));
        max_id = std::max({max_id, u, v});
    }

    const int n = declared_n >= 0 ? declared_n : max_id + 1;
    if (max_id >= n)
        throw std::invalid_argument("edge endpoint " + std::to_string(max_id) +
                                    " exceeds declared vertex count " + std::to_string(n));
    return Graph(n, std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> members;
        std::queue<int> q;
        comp[s] = id;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            members.push_back(v);
            for (int w : g.neighbours(v)) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    q.push(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
#ifndef NDEBUG
    std::size_t covered = 0;
    for (const auto& c : out) covered += c.size();
    assert(covered == static_cast<std::size_t>(n));
#endif
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int root) {
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("bfs root out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.neighbours(v)) {
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> ids(vertices.begin(), vertices.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int v : ids)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced subgraph member out of range");

    std::vector<int> to_new(g.vertex_count(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) to_new[ids[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (to_new[e.u] != -1 && to_new[e.v] != -1)
            edges.push_back(make_edge(to_new[e.u], to_new[e.v]));
    return InducedSubgraph{Graph(static_cast<int>(ids.size()), std::move(edges)), std::move(ids)};
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

} // namespace symbreak
