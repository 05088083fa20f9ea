#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "happyset/graph.hpp"

namespace happyset {

namespace detail {

class bitrow {
public:
    bitrow() = default;
    explicit bitrow(int n) : words_((n + 63) / 64, 0), n_(n) {}

    void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    int size() const { return n_; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    int and_count(const bitrow& o) const {
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += __builtin_popcountll(words_[i] & o.words_[i]);
        return c;
    }

    // smallest set bit of (this & ~mask), or -1
    int first_not_in(const bitrow& mask) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i] & ~mask.words_[i];
            if (w) return static_cast<int>(i * 64) + __builtin_ctzll(w);
        }
        return -1;
    }

private:
    std::vector<std::uint64_t> words_;
    int n_ = 0;
};

}  // namespace detail

enum class module_kind { leaf, parallel, series, prime };

inline const char* module_kind_name(module_kind k) {
    switch (k) {
        case module_kind::leaf: return "leaf";
        case module_kind::parallel: return "parallel";
        case module_kind::series: return "series";
        default: return "prime";
    }
}

// Substitution-tree node.  `vertices` is the module of the original graph
// this node represents; for internal nodes, child i stands for vertex i of
// `metagraph` and the children's vertex sets partition `vertices`.
struct parse_tree_node {
    module_kind kind = module_kind::leaf;
    std::vector<int> vertices;
    graph metagraph;
    std::vector<parse_tree_node> children;

    int fanout() const { return static_cast<int>(children.size()); }
};

struct parse_tree {
    parse_tree_node root;
    int n = 0;
    int prime_width = 0;  // max fanout over prime nodes only
    int max_fanout = 0;   // max fanout over all substitution nodes
};

namespace detail {

struct local_view {
    std::vector<int> verts;         // original ids, ascending
    std::vector<bitrow> adj;        // local adjacency
    int size() const { return static_cast<int>(verts.size()); }
};

inline local_view make_local(const graph& g, std::vector<int> verts) {
    local_view lv;
    lv.verts = std::move(verts);
    const int s = lv.size();
    std::vector<int> lid(g.n(), -1);
    for (int i = 0; i < s; ++i) lid[lv.verts[i]] = i;
    lv.adj.assign(s, bitrow(s));
    for (int i = 0; i < s; ++i)
        for (int u : g.neighbors(lv.verts[i])) {
            int j = lid[u];
            if (j >= 0) lv.adj[i].set(j);
        }
    return lv;
}

// connected components in local ids, seeded in ascending order;
// `in_complement` flips adjacency
inline std::vector<std::vector<int>> components(const local_view& lv, bool in_complement) {
    const int s = lv.size();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(s, 0);
    for (int seed = 0; seed < s; ++seed) {
        if (seen[seed]) continue;
        comps.emplace_back();
        std::vector<int> stack = {seed};
        seen[seed] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int u = 0; u < s; ++u) {
                if (seen[u]) continue;
                bool adj = lv.adj[v].test(u);
                if (u != v && (in_complement ? !adj : adj)) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

// minimal module containing `a` and `b`: grow by absorbing splitters
inline bitrow module_closure(const local_view& lv, int a, int b) {
    const int s = lv.size();
    bitrow m(s);
    m.set(a);
    m.set(b);
    int msize = 2;
    bool grew = true;
    while (grew && msize < s) {
        grew = false;
        for (int z = 0; z < s; ++z) {
            if (m.test(z)) continue;
            int c = lv.adj[z].and_count(m);
            if (c > 0 && c < msize) {
                m.set(z);
                ++msize;
                grew = true;
                if (msize == s) break;
            }
        }
    }
    return m;
}

// partition into maximal proper strong modules; valid when the graph and its
// complement are both connected (then two vertices share a class iff their
// module closure is proper)
inline std::vector<std::vector<int>> prime_classes(const local_view& lv) {
    const int s = lv.size();
    std::vector<int> cls(s, -1);
    std::vector<int> reps;
    for (int u = 0; u < s; ++u) {
        if (cls[u] >= 0) continue;
        for (size_t r = 0; r < reps.size() && cls[u] < 0; ++r) {
            bitrow m = module_closure(lv, u, reps[r]);
            if (m.count() == s) continue;
            for (int v = 0; v < s; ++v)
                if (m.test(v)) {
                    assert(cls[v] < 0 || cls[v] == static_cast<int>(r));
                    cls[v] = static_cast<int>(r);
                }
        }
        if (cls[u] < 0) {
            cls[u] = static_cast<int>(reps.size());
            reps.push_back(u);
        }
    }
    std::vector<std::vector<int>> classes(reps.size());
    for (int v = 0; v < s; ++v) classes[cls[v]].push_back(v);
    return classes;
}

inline parse_tree_node decompose_rec(const graph& g, std::vector<int> verts) {
    parse_tree_node node;
    node.vertices = verts;
    if (verts.size() == 1) {
        node.kind = module_kind::leaf;
        return node;
    }
    local_view lv = make_local(g, std::move(verts));

    std::vector<std::vector<int>> parts = components(lv, false);
    if (parts.size() > 1) {
        node.kind = module_kind::parallel;
    } else {
        parts = components(lv, true);
        if (parts.size() > 1) {
            node.kind = module_kind::series;
        } else {
            node.kind = module_kind::prime;
            parts = prime_classes(lv);
            assert(parts.size() >= 4);  // smallest prime quotient is a P4
        }
    }

    const int c = static_cast<int>(parts.size());
    std::vector<edge> medges;
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) {
            bool adj = lv.adj[parts[i][0]].test(parts[j][0]);
            assert(node.kind != module_kind::parallel || !adj);
            assert(node.kind != module_kind::series || adj);
            if (adj) medges.emplace_back(i, j);
        }
    node.metagraph = graph(c, medges);

    node.children.reserve(parts.size());
    for (auto& p : parts) {
        std::vector<int> orig;
        orig.reserve(p.size());
        for (int v : p) orig.push_back(lv.verts[v]);
        node.children.push_back(decompose_rec(g, std::move(orig)));
    }
    return node;
}

inline void collect_widths(const parse_tree_node& nd, parse_tree& t) {
    if (nd.kind == module_kind::leaf) return;
    t.max_fanout = std::max(t.max_fanout, nd.fanout());
    if (nd.kind == module_kind::prime) t.prime_width = std::max(t.prime_width, nd.fanout());
    for (const auto& ch : nd.children) collect_widths(ch, t);
}

}  // namespace detail

inline parse_tree modular_decompose(const graph& g) {
    if (g.n() < 1) throw input_error("modular decomposition needs n >= 1");
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    parse_tree t;
    t.n = g.n();
    t.root = detail::decompose_rec(g, std::move(all));
    detail::collect_widths(t.root, t);
    return t;
}

namespace detail {

inline void evaluate_rec(const parse_tree_node& nd, std::vector<edge>& es) {
    for (auto [i, j] : nd.metagraph.edges())
        for (int u : nd.children[i].vertices)
            for (int v : nd.children[j].vertices) es.emplace_back(std::min(u, v), std::max(u, v));
    for (const auto& ch : nd.children) evaluate_rec(ch, es);
}

}  // namespace detail

// Substitutes children into quotients bottom-up; must reproduce the graph the
// tree was computed from.
inline graph evaluate_parse_tree(const parse_tree& t) {
    std::vector<edge> es;
    detail::evaluate_rec(t.root, es);
    return graph(t.n, es);
}

}  // namespace happyset
