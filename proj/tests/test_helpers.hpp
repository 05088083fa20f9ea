#pragma once

// Test-side oracles.  These stay independent of the library code paths they
// check: straight restatements of the definitions, nothing shared with the
// solvers beyond the graph type.

#include <map>
#include <optional>
#include <vector>

#include "happyset/generators.hpp"
#include "happyset/graph.hpp"
#include "happyset/knapsack.hpp"

namespace testutil {

// |{v : N[v] subseteq s}| straight from the definition
inline long long happy_vertices_by_definition(const happyset::graph& g,
                                              const std::vector<int>& s) {
    std::vector<char> in(g.n(), 0);
    for (int v : s) in[v] = 1;
    long long happy = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (!in[v]) continue;
        bool ok = true;
        for (int u : g.neighbors(v))
            if (!in[u]) { ok = false; break; }
        if (ok) ++happy;
    }
    return happy;
}

// cross-product enumeration of an f-knapsack instance; opt value per exact
// weight, or nullopt
inline std::vector<std::optional<long long>> knapsack_by_enumeration(
    const happyset::fknapsack_instance& inst) {
    std::vector<std::optional<long long>> best(inst.capacity + 1);
    for (const auto& it : inst.items)
        if (it.table.empty()) return best;
    std::vector<size_t> pick(inst.items.size(), 0);
    while (true) {
        long long w = 0, val = 0;
        for (size_t i = 0; i < inst.items.size(); ++i) {
            w += inst.items[i].table[pick[i]].first;
            val += inst.items[i].table[pick[i]].second;
        }
        if (w <= inst.capacity) {
            auto& b = best[static_cast<size_t>(w)];
            if (!b || val > *b) b = val;
        }
        size_t i = 0;
        for (; i < inst.items.size(); ++i) {
            if (++pick[i] < inst.items[i].table.size()) break;
            pick[i] = 0;
        }
        if (i == inst.items.size()) break;
    }
    return best;
}

inline happyset::graph random_graph(int n, double density, std::uint64_t seed) {
    return happyset::gen_gnp(n, density, seed);
}

}  // namespace testutil
