#include <catch2/catch_amalgamated.hpp>

#include "happyset/generators.hpp"
#include "happyset/knapsack.hpp"
#include "test_helpers.hpp"

using namespace happyset;

namespace {

fknapsack_item item_from_values(const std::vector<long long>& vals) {
    fknapsack_item it;
    for (size_t x = 0; x < vals.size(); ++x) it.table.emplace_back(static_cast<int>(x), vals[x]);
    return it;
}

}  // namespace

TEST_CASE("worked two-clique instance") {
    // f1 over 0..4, f2 over 0..2, capacity 3; best is x = (3, 0) worth 9
    fknapsack_instance inst;
    inst.items = {item_from_values({0, 3, 6, 9, 12}), item_from_values({0, 2, 3})};
    inst.capacity = 3;
    auto res = solve_all_capacities(inst);
    REQUIRE(res.opt(3).has_value());
    CHECK(*res.opt(3) == 9);
    auto x = reconstruct(res, 3);
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<int>{3, 0});
}

TEST_CASE("degenerate instances") {
    fknapsack_instance empty;
    empty.capacity = 2;
    auto res = solve_all_capacities(empty);
    CHECK(res.opt(0) == 0);
    CHECK_FALSE(res.opt(1).has_value());
    CHECK_FALSE(res.opt(2).has_value());

    fknapsack_instance forced;
    forced.items.push_back({{{2, 7}}});
    forced.capacity = 3;
    auto r2 = solve_all_capacities(forced);
    CHECK_FALSE(r2.opt(0).has_value());
    CHECK_FALSE(r2.opt(1).has_value());
    CHECK(r2.opt(2) == 7);
    CHECK_FALSE(r2.opt(3).has_value());
    CHECK_FALSE(reconstruct(r2, 1).has_value());
}

TEST_CASE("domain values above the capacity are never selected") {
    fknapsack_instance inst;
    inst.items.push_back({{{0, 0}, {5, 100}}});
    inst.capacity = 3;
    auto res = solve_all_capacities(inst);
    CHECK(res.opt(0) == 0);
    for (int w = 1; w <= 3; ++w) CHECK_FALSE(res.opt(w).has_value());
}

TEST_CASE("input validation") {
    fknapsack_instance bad;
    bad.items.push_back({{{1, -2}}});
    bad.capacity = 1;
    CHECK_THROWS_AS(solve_all_capacities(bad), input_error);

    fknapsack_instance dup;
    dup.items.push_back({{{1, 0}, {1, 2}}});
    dup.capacity = 1;
    CHECK_THROWS_AS(solve_all_capacities(dup), input_error);
}

TEST_CASE("matches cross-product enumeration on random gapped instances") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        rng64 rng(seed);
        fknapsack_instance inst;
        inst.capacity = static_cast<int>(rng.below(9));
        int nitems = 1 + static_cast<int>(rng.below(5));
        for (int i = 0; i < nitems; ++i) {
            fknapsack_item it;
            for (int x = 0; x <= 8; ++x)
                if (rng.coin(0.45)) it.table.emplace_back(x, static_cast<long long>(rng.below(20)));
            if (it.table.empty()) it.table.emplace_back(static_cast<int>(rng.below(9)), 1);
            inst.items.push_back(std::move(it));
        }
        auto res = solve_all_capacities(inst);
        auto expect = testutil::knapsack_by_enumeration(inst);
        CAPTURE(seed);
        for (int w = 0; w <= inst.capacity; ++w) {
            CAPTURE(w);
            REQUIRE(res.opt(w) == expect[w]);
            if (!res.opt(w)) continue;
            auto x = reconstruct(res, w);
            REQUIRE(x.has_value());
            long long tot = 0, val = 0;
            for (size_t i = 0; i < x->size(); ++i) {
                bool in_domain = false;
                for (auto [dx, fx] : inst.items[i].table)
                    if (dx == (*x)[i]) { in_domain = true; val += fx; }
                REQUIRE(in_domain);
                tot += (*x)[i];
            }
            CHECK(tot == w);
            CHECK(val == *res.opt(w));
        }
    }
}

TEST_CASE("all-zero reconstruction at weight zero") {
    fknapsack_instance inst;
    inst.items = {item_from_values({0, 1}), item_from_values({0, 5, 6})};
    inst.capacity = 2;
    auto res = solve_all_capacities(inst);
    auto x = reconstruct(res, 0);
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<int>{0, 0});
}
