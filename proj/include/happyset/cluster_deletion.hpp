#pragma once

#include <array>
#include <cassert>
#include <optional>
#include <vector>

#include "happyset/graph.hpp"

namespace happyset {

struct cluster_deletion_set {
    std::vector<int> deleted;                // sorted
    std::vector<std::vector<int>> clusters;  // cliques of G[V \ deleted], by smallest member
};

namespace detail {

// lexicographically smallest induced path on 3 active vertices, as a sorted
// triple; middle vertex returned separately
struct p3 {
    std::array<int, 3> sorted;
    int middle;
};

inline std::optional<p3> find_smallest_p3(const graph& g, const std::vector<char>& active) {
    std::optional<p3> best;
    for (int b = 0; b < g.n(); ++b) {
        if (!active[b]) continue;
        const auto& nb = g.neighbors(b);
        for (size_t x = 0; x < nb.size(); ++x) {
            if (!active[nb[x]]) continue;
            for (size_t y = x + 1; y < nb.size(); ++y) {
                if (!active[nb[y]]) continue;
                if (g.has_edge(nb[x], nb[y])) continue;
                p3 cand{{nb[x], nb[y], b}, b};
                std::sort(cand.sorted.begin(), cand.sorted.end());
                if (!best || cand.sorted < best->sorted) best = cand;
            }
        }
    }
    return best;
}

// branch on the current smallest P3: middle vertex first, then the endpoints
// in ascending order
inline bool cd_branch(const graph& g, std::vector<char>& active, int budget,
                      std::vector<int>& deleted) {
    auto hit = find_smallest_p3(g, active);
    if (!hit) return true;
    if (budget == 0) return false;
    std::array<int, 3> order = {hit->middle, -1, -1};
    int e = 1;
    for (int v : hit->sorted)
        if (v != hit->middle) order[e++] = v;
    for (int v : order) {
        active[v] = 0;
        deleted.push_back(v);
        if (cd_branch(g, active, budget - 1, deleted)) return true;
        deleted.pop_back();
        active[v] = 1;
    }
    return false;
}

}  // namespace detail

// Minimum set of at most `budget` vertices whose removal leaves disjoint
// cliques, or nullopt when no such set exists within the budget.  Found by
// iterative deepening so the reported set has minimum size.
inline std::optional<cluster_deletion_set> compute_cluster_deletion_set(const graph& g,
                                                                        int budget) {
    if (budget < 0) throw input_error("cluster deletion: negative budget");
    std::vector<char> active(g.n(), 1);
    for (int b = 0; b <= budget; ++b) {
        std::vector<int> deleted;
        if (!detail::cd_branch(g, active, b, deleted)) continue;
        cluster_deletion_set out;
        out.deleted = deleted;
        std::sort(out.deleted.begin(), out.deleted.end());
        std::vector<char> gone(g.n(), 0);
        for (int v : out.deleted) gone[v] = 1;
        std::vector<char> seen(g.n(), 0);
        for (int s = 0; s < g.n(); ++s) {
            if (gone[s] || seen[s]) continue;
            std::vector<int> comp, stack = {s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int u : g.neighbors(v))
                    if (!gone[u] && !seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
            std::sort(comp.begin(), comp.end());
            for (size_t a = 0; a < comp.size(); ++a)
                for (size_t c = a + 1; c < comp.size(); ++c)
                    assert(g.has_edge(comp[a], comp[c]));
            out.clusters.push_back(std::move(comp));
        }
        return out;
    }
    return std::nullopt;
}

// every graph has a deletion set (delete everything), so this always succeeds
inline cluster_deletion_set compute_minimum_cluster_deletion_set(const graph& g) {
    auto r = compute_cluster_deletion_set(g, g.n());
    assert(r);
    return *r;
}

}  // namespace happyset
