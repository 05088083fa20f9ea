#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <vector>

#include "happyset/graph.hpp"

namespace happyset {

// Coarsest partition of V into twin classes.  Each class induces a clique or
// an independent set; between two classes there are either all edges or none.
struct twin_partition {
    std::vector<std::vector<int>> modules;  // ordered by smallest member
    std::vector<bool> is_clique;            // singleton classes count as cliques
    graph quotient;

    int width() const { return static_cast<int>(modules.size()); }
};

namespace detail {

struct union_find {
    std::vector<int> p;
    explicit union_find(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void merge(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace detail

inline twin_partition compute_twin_partition(const graph& g) {
    if (g.n() < 1) throw input_error("twin partition needs n >= 1");
    const int n = g.n();

    // group by open neighborhood (false twins) and closed neighborhood
    // (true twins), then merge the groupings
    detail::union_find uf(n);
    std::map<std::vector<int>, int> open_rep, closed_rep;
    for (int v = 0; v < n; ++v) {
        std::vector<int> open = g.neighbors(v);
        auto [ito, newo] = open_rep.try_emplace(open, v);
        if (!newo) uf.merge(v, ito->second);
        std::vector<int> closed = open;
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        auto [itc, newc] = closed_rep.try_emplace(closed, v);
        if (!newc) uf.merge(v, itc->second);
    }

    twin_partition tp;
    std::vector<int> cid(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (cid[r] < 0) {
            cid[r] = static_cast<int>(tp.modules.size());
            tp.modules.emplace_back();
        }
        cid[v] = cid[r];
        tp.modules[cid[v]].push_back(v);
    }

    // pairwise verification: every class member pair must be twins
    for (const auto& mod : tp.modules) {
        bool clique = mod.size() >= 1;
        for (size_t a = 0; a < mod.size(); ++a)
            for (size_t b = a + 1; b < mod.size(); ++b) {
                const int u = mod[a], v = mod[b];
                clique = clique && g.has_edge(u, v);
                std::vector<int> nu, nv;
                for (int x : g.neighbors(u))
                    if (x != v) nu.push_back(x);
                for (int x : g.neighbors(v))
                    if (x != u) nv.push_back(x);
                assert(nu == nv);
                (void)nu;
                (void)nv;
            }
        tp.is_clique.push_back(clique);
    }

    // quotient adjacency; verify the all-or-none property by edge counting
    const int w = tp.width();
    std::vector<std::vector<long long>> cross(w, std::vector<long long>(w, 0));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v && cid[u] != cid[v]) ++cross[cid[u]][cid[v]];
    std::vector<edge> qedges;
    for (int i = 0; i < w; ++i)
        for (int j = i + 1; j < w; ++j) {
            long long total = cross[i][j] + cross[j][i];
            long long full =
                static_cast<long long>(tp.modules[i].size()) * tp.modules[j].size();
            assert(total == 0 || total == full);
            (void)full;
            if (total > 0) qedges.emplace_back(i, j);
        }
    tp.quotient = graph(w, qedges);
    return tp;
}

// Expands the quotient back to a concrete graph; used to cross-check that the
// partition describes the input exactly.
inline graph expand_twin_partition(const twin_partition& tp) {
    int n = 0;
    for (const auto& m : tp.modules) n += static_cast<int>(m.size());
    std::vector<edge> es;
    for (size_t i = 0; i < tp.modules.size(); ++i)
        if (tp.is_clique[i])
            for (size_t a = 0; a < tp.modules[i].size(); ++a)
                for (size_t b = a + 1; b < tp.modules[i].size(); ++b)
                    es.emplace_back(std::min(tp.modules[i][a], tp.modules[i][b]),
                                    std::max(tp.modules[i][a], tp.modules[i][b]));
    for (auto [i, j] : tp.quotient.edges())
        for (int u : tp.modules[i])
            for (int v : tp.modules[j]) es.emplace_back(std::min(u, v), std::max(u, v));
    return graph(n, es);
}

}  // namespace happyset
