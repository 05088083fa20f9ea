#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "happyset/common.hpp"

namespace happyset {

// Exact-total-weight knapsack with unit item weights and per-item value
// tables over explicit integer domains.  Infeasible capacities are a
// distinct state (empty optional), never a numeric -infinity.

struct fknapsack_item {
    // (x, f(x)) pairs, strictly increasing in x; all values >= 0
    std::vector<std::pair<int, long long>> table;
};

struct fknapsack_instance {
    std::vector<fknapsack_item> items;
    int capacity = 0;
};

class fknapsack_result {
public:
    fknapsack_result(fknapsack_instance inst,
                     std::vector<std::vector<std::optional<long long>>> phi, long long cells)
        : inst_(std::move(inst)), phi_(std::move(phi)), cells_(cells) {}

    int capacity() const { return inst_.capacity; }
    const fknapsack_instance& instance() const { return inst_; }

    // optimum for exact total weight w, or nullopt if no assignment sums to w
    std::optional<long long> opt(int w) const { return phi_.back()[w]; }

    // phi[t][w]: best over the first t items at exact weight w
    const std::optional<long long>& partial(int t, int w) const { return phi_[t][w]; }

    long long cells_computed() const { return cells_; }

private:
    fknapsack_instance inst_;
    std::vector<std::vector<std::optional<long long>>> phi_;
    long long cells_;
};

inline fknapsack_result solve_all_capacities(fknapsack_instance inst) {
    if (inst.capacity < 0) throw input_error("negative knapsack capacity");
    const int W = inst.capacity;
    const int n = static_cast<int>(inst.items.size());
    for (const auto& it : inst.items) {
        int prev = -1;
        for (auto [x, fx] : it.table) {
            if (x <= prev) throw input_error("knapsack domain not strictly increasing");
            if (x < 0) throw input_error("negative knapsack domain value");
            if (fx < 0) throw input_error("negative knapsack value");
            prev = x;
        }
    }

    std::vector<std::vector<std::optional<long long>>> phi(
        n + 1, std::vector<std::optional<long long>>(W + 1));
    phi[0][0] = 0;
    for (int t = 1; t <= n; ++t) {
        for (int w = 0; w <= W; ++w) {
            std::optional<long long> best;
            for (auto [x, fx] : inst.items[t - 1].table) {
                if (x > w) break;
                const auto& prev = phi[t - 1][w - x];
                if (!prev) continue;
                long long cand = fx + *prev;
                if (!best || cand > *best) best = cand;
            }
            phi[t][w] = best;
        }
    }
    long long cells = static_cast<long long>(n + 1) * (W + 1);
    return fknapsack_result(std::move(inst), std::move(phi), cells);
}

// One optimal assignment {x_i} summing exactly to w, or nullopt when opt(w)
// is infeasible.  Ties are broken by the smallest x_t at each step.
inline std::optional<std::vector<int>> reconstruct(const fknapsack_result& res, int w) {
    if (w < 0 || w > res.capacity()) throw input_error("reconstruct weight out of range");
    if (!res.opt(w)) return std::nullopt;
    const auto& items = res.instance().items;
    const int n = static_cast<int>(items.size());
    std::vector<int> x(n, 0);
    int rem = w;
    for (int t = n; t >= 1; --t) {
        const long long target = *res.partial(t, rem);
        bool found = false;
        for (auto [xt, fxt] : items[t - 1].table) {
            if (xt > rem) break;
            const auto& prev = res.partial(t - 1, rem - xt);
            if (prev && fxt + *prev == target) {
                x[t - 1] = xt;
                rem -= xt;
                found = true;
                break;
            }
        }
        assert(found);
        (void)found;
    }
    assert(rem == 0);
    return x;
}

}  // namespace happyset
