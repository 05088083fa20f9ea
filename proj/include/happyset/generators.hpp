#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "happyset/graph.hpp"

namespace happyset {

// Deterministic generation only: raw mt19937_64 draws, no std distributions
// (their output is implementation-defined).
class rng64 {
public:
    explicit rng64(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    bool coin(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t s_;
};

// ---- fixed instances from worked examples ----------------------------------

// 8 vertices a..h mapped to 0..7; the K4 {a,b,c,d} bridged through e to the
// 4-cycle e,f,h,g.
inline graph figure3_graph() {
    return graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5},
                     {4, 6}, {5, 7}, {6, 7}});
}

// 7 vertices a..g mapped to 0..6; modular-width 4 (root quotient is a P4).
inline graph figure4_graph() {
    return graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}});
}

// Five twin modules: sizes 4,3,4,2,3; kinds clique,clique,independent,
// independent,clique; quotient edges 1-2, 1-3, 2-4, 3-4, 3-5.
inline graph figure6_graph() {
    const std::vector<std::vector<int>> mods = {
        {0, 1, 2, 3}, {4, 5, 6}, {7, 8, 9, 10}, {11, 12}, {13, 14, 15}};
    const std::vector<bool> clique = {true, true, false, false, true};
    const std::vector<std::pair<int, int>> quot = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}};
    std::vector<edge> es;
    for (size_t i = 0; i < mods.size(); ++i)
        if (clique[i])
            for (size_t a = 0; a < mods[i].size(); ++a)
                for (size_t b = a + 1; b < mods[i].size(); ++b)
                    es.emplace_back(mods[i][a], mods[i][b]);
    for (auto [i, j] : quot)
        for (int u : mods[i])
            for (int v : mods[j]) es.emplace_back(std::min(u, v), std::max(u, v));
    return graph(16, es);
}

// Deletion set x1..x6 = 0..5, cliques {6..9} and {10,11}.
inline graph figure7_graph() {
    return graph(12, {{0, 1}, {2, 3},  {4, 5},  {0, 6},  {1, 6},  {2, 6},  {1, 7},  {2, 7},
                      {3, 7}, {2, 8},  {3, 9},  {4, 9},  {1, 10}, {2, 10}, {5, 11}, {6, 7},
                      {6, 8}, {6, 9},  {7, 8},  {7, 9},  {8, 9},  {10, 11}});
}

inline std::vector<int> figure7_deletion_set() { return {0, 1, 2, 3, 4, 5}; }
inline std::vector<int> figure7_sprime() { return {0, 1, 2}; }

inline graph figure_graph(const std::string& name) {
    if (name == "fig3") return figure3_graph();
    if (name == "fig4") return figure4_graph();
    if (name == "fig6") return figure6_graph();
    if (name == "fig7") return figure7_graph();
    throw input_error("unknown figure name: " + name + " (expected fig3|fig4|fig6|fig7)");
}

// ---- random families --------------------------------------------------------

inline graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw input_error("gnp: negative n");
    rng64 rng(seed);
    std::vector<edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p)) es.emplace_back(u, v);
    return graph(n, es);
}

namespace detail {

// Substitution-tree generator.  Internal nodes get fanout min(size, w).
// Quotients: a path for fanout >= 4 (prime), otherwise complete on even
// depth and empty on odd depth, so the decomposition recovers the exact
// tree shape (complete-over-complete or empty-over-empty nestings would
// collapse).
inline void gen_mw_rec(int lo, int hi, int w, int depth, rng64& rng,
                       std::vector<edge>& es) {
    const int size = hi - lo;
    if (size <= 1) return;
    const int c = std::min(size, w);
    std::vector<int> part(c, size / c);
    for (int i = 0; i < size % c; ++i) part[i] += 1;
    rng.shuffle(part);
    std::vector<int> start(c + 1, lo);
    for (int i = 0; i < c; ++i) start[i + 1] = start[i] + part[i];

    std::vector<std::pair<int, int>> quot;
    if (c >= 4) {
        std::vector<int> order(c);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        for (int i = 0; i + 1 < c; ++i) quot.emplace_back(order[i], order[i + 1]);
    } else if (depth % 2 == 0) {
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j < c; ++j) quot.emplace_back(i, j);
    }
    for (auto [i, j] : quot)
        for (int u = start[i]; u < start[i + 1]; ++u)
            for (int v = start[j]; v < start[j + 1]; ++v)
                es.emplace_back(std::min(u, v), std::max(u, v));
    for (int i = 0; i < c; ++i) gen_mw_rec(start[i], start[i + 1], w, depth + 1, rng, es);
}

}  // namespace detail

// Graph with modular-width at most w (and fanout exactly w away from the
// leaves), with vertex ids scrambled.
inline graph gen_bounded_mw(int n, int w, std::uint64_t seed) {
    if (n < 1) throw input_error("bounded-mw: n must be >= 1");
    if (w < 2) throw input_error("bounded-mw: w must be >= 2");
    rng64 rng(seed);
    std::vector<edge> es;
    detail::gen_mw_rec(0, n, w, 0, rng, es);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    for (auto& [u, v] : es) {
        u = perm[u];
        v = perm[v];
        if (u > v) std::swap(u, v);
    }
    return graph(n, es);
}

// Disjoint cliques plus `apex` extra vertices wired randomly; deleting the
// apex vertices always leaves a cluster graph.
inline graph gen_cluster_apex(const std::vector<int>& clique_sizes, int apex,
                              std::uint64_t seed) {
    if (apex < 0) throw input_error("cluster-apex: negative apex count");
    int base = 0;
    std::vector<edge> es;
    for (int sz : clique_sizes) {
        if (sz < 1) throw input_error("cluster-apex: clique size must be >= 1");
        for (int a = 0; a < sz; ++a)
            for (int b = a + 1; b < sz; ++b) es.emplace_back(base + a, base + b);
        base += sz;
    }
    const int n = base + apex;
    rng64 rng(seed);
    for (int a = base; a < n; ++a) {
        for (int v = 0; v < base; ++v)
            if (rng.coin(0.5)) es.emplace_back(v, a);
        for (int b = a + 1; b < n; ++b)
            if (rng.coin(0.5)) es.emplace_back(a, b);
    }
    return graph(n, es);
}

}  // namespace happyset
