#pragma once

#include <stdexcept>
#include <vector>

#include "happyset/graph.hpp"

namespace happyset {

struct oracle_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr long long default_oracle_cap = 5'000'000;

// C(n, k), saturating at `cap_hint + 1` to avoid overflow
inline long long binomial_capped(int n, int k, long long cap_hint) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap_hint) return cap_hint + 1;
    }
    return r;
}

// Calls fn for every k-subset of 0..n-1 in lexicographic order.
template <typename Fn>
inline void for_each_k_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        fn(const_cast<const std::vector<int>&>(s));
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

namespace detail {

template <typename Score>
inline happy_set_solution brute_best(const graph& g, int k, problem_kind prob, long long cap,
                                     Score&& score) {
    if (k < 0 || k > g.n()) throw input_error("brute oracle: k out of range");
    if (binomial_capped(g.n(), k, cap) > cap)
        throw oracle_cap_error("brute oracle: C(n,k) exceeds enumeration cap");
    happy_set_solution best{prob, {}, k, -1};
    for_each_k_subset(g.n(), k, [&](const std::vector<int>& s) {
        long long v = score(s);
        if (v > best.objective) {
            best.objective = v;
            best.chosen = s;
        }
    });
    return best;
}

}  // namespace detail

inline happy_set_solution brute_maxhs(const graph& g, int k,
                                      long long cap = default_oracle_cap) {
    return detail::brute_best(g, k, problem_kind::maxhs, cap,
                              [&](const std::vector<int>& s) { return count_happy_vertices(g, s); });
}

inline happy_set_solution brute_maxehs(const graph& g, int k,
                                       long long cap = default_oracle_cap) {
    return detail::brute_best(g, k, problem_kind::maxehs, cap,
                              [&](const std::vector<int>& s) { return count_happy_edges(g, s); });
}

}  // namespace happyset
