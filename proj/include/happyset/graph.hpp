#pragma once

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "happyset/common.hpp"

namespace happyset {

using edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1.  Immutable after construction;
// adjacency lists are kept sorted.
class graph {
public:
    graph() = default;

    graph(int n, const std::vector<edge>& edges) : adj_(check_n(n)) {
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw input_error("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
            if (u == v)
                throw input_error("self-loop at vertex " + std::to_string(u));
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw input_error("parallel edge detected");
        }
        m_ = static_cast<long long>(edges.size());
    }

    int n() const { return static_cast<int>(adj_.size()); }
    long long m() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const {
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::vector<edge> edges() const {
        std::vector<edge> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    graph complement() const {
        std::vector<edge> ce;
        for (int u = 0; u < n(); ++u)
            for (int v = u + 1; v < n(); ++v)
                if (!has_edge(u, v)) ce.emplace_back(u, v);
        return graph(n(), ce);
    }

    bool operator==(const graph& o) const { return adj_ == o.adj_; }

private:
    static int check_n(int n) {
        if (n < 0) throw input_error("negative vertex count");
        return n;
    }

    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

enum class problem_kind { maxhs, maxehs };

inline const char* problem_name(problem_kind p) {
    return p == problem_kind::maxhs ? "maxhs" : "maxehs";
}

struct happy_set_solution {
    problem_kind problem;
    std::vector<int> chosen;  // sorted vertex ids, |chosen| = k
    int k = 0;
    long long objective = 0;
};

namespace detail {

// membership flags for a vertex set; rejects out-of-range ids and duplicates
inline std::vector<char> set_flags(const graph& g, const std::vector<int>& s) {
    std::vector<char> in(g.n(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.n())
            throw input_error("vertex id out of range: " + std::to_string(v));
        if (in[v]) throw input_error("duplicate vertex in set: " + std::to_string(v));
        in[v] = 1;
    }
    return in;
}

}  // namespace detail

// Number of vertices v with N[v] included in s, computed as n - |N[V \ s]|.
inline long long count_happy_vertices(const graph& g, const std::vector<int>& s) {
    auto in = detail::set_flags(g, s);
    std::vector<char> unhappy(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (in[v]) continue;
        unhappy[v] = 1;
        for (int u : g.neighbors(v)) unhappy[u] = 1;
    }
    long long happy = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!unhappy[v]) ++happy;
    return happy;
}

// Number of edges with both endpoints in s.
inline long long count_happy_edges(const graph& g, const std::vector<int>& s) {
    auto in = detail::set_flags(g, s);
    long long cnt = 0;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (in[u]) ++cnt;
    assert(cnt % 2 == 0);
    return cnt / 2;
}

struct induced_subgraph_result {
    graph g;
    std::vector<int> vertex_of;  // new id -> original id, ascending
};

inline induced_subgraph_result induced_subgraph(const graph& g, const std::vector<int>& x) {
    auto in = detail::set_flags(g, x);
    induced_subgraph_result out;
    out.vertex_of.reserve(x.size());
    std::vector<int> new_id(g.n(), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (!in[v]) continue;
        new_id[v] = static_cast<int>(out.vertex_of.size());
        out.vertex_of.push_back(v);
    }
    std::vector<edge> es;
    for (int v : out.vertex_of)
        for (int u : g.neighbors(v))
            if (v < u && in[u]) es.emplace_back(new_id[v], new_id[u]);
    out.g = graph(static_cast<int>(out.vertex_of.size()), es);
    return out;
}

// ---- graph text format ----------------------------------------------------
// First line "n m", then m lines "u v" with 0 <= u < v < n.  Lines starting
// with '#' are comments.

inline graph read_graph(std::istream& is) {
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<edge> edges;
    while (std::getline(is, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw input_error("bad graph header, expected 'n m'");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw input_error("bad edge line: " + line);
        if (!(0 <= u && u < v && v < n))
            throw input_error("edge must satisfy 0 <= u < v < n: " + line);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw input_error("empty graph file");
    if (static_cast<long long>(edges.size()) != m)
        throw input_error("edge count mismatch: header says " + std::to_string(m) + ", got " +
                          std::to_string(edges.size()));
    return graph(n, edges);
}

inline graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is);
}

inline void write_graph(std::ostream& os, const graph& g) {
    os << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline std::string format_graph(const graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

}  // namespace happyset
