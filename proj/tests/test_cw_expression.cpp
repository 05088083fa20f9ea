#include <catch2/catch_amalgamated.hpp>

#include "happyset/cw_expression.hpp"
#include "happyset/generators.hpp"
#include "test_helpers.hpp"

using namespace happyset;

TEST_CASE("builder basics") {
    cw_builder b;
    int v = b.introduce(0, 1);
    cw_expression single = b.finish(v);
    CHECK(single.n == 1);
    CHECK(evaluate_cw_expression(single).g.n() == 1);

    cw_builder b2;
    int u = b2.introduce(0, 1);
    int w = b2.introduce(1, 2);
    int un = b2.disjoint_union(u, w);
    int jn = b2.join(1, 2, un);
    cw_expression k2 = b2.finish(jn);
    auto lg = evaluate_cw_expression(k2);
    CHECK(lg.g.m() == 1);
    CHECK(lg.label == std::vector<int>{1, 2});
}

TEST_CASE("identity relabel is normalized away, self-join rejected") {
    cw_builder b;
    int v = b.introduce(0, 1);
    CHECK(b.relabel(1, 1, v) == v);
    CHECK_THROWS_AS(b.join(1, 1, v), input_error);
}

TEST_CASE("structural validation") {
    {
        cw_builder b;
        int a = b.introduce(0, 1);
        int c = b.introduce(0, 1);
        int u = b.disjoint_union(a, c);
        CHECK_THROWS_AS(b.finish(u), input_error);  // vertex introduced twice
    }
    {
        cw_builder b;
        int a = b.introduce(0, 1);
        b.introduce(1, 1);
        CHECK_THROWS_AS(b.finish(a), input_error);  // root must be last
    }
    {
        cw_builder b;
        int a = b.introduce(0, 1);
        int u = b.disjoint_union(a, a);
        CHECK_THROWS_AS(b.finish(u), input_error);  // node reused, not a tree
    }
    {
        cw_builder b;
        int a = b.introduce(0, 1);
        int c = b.introduce(2, 1);
        int u = b.disjoint_union(a, c);
        CHECK_THROWS_AS(b.finish(u), input_error);  // ids not dense
    }
}

TEST_CASE("text format round-trip") {
    const std::string text =
        "# two vertices, one edge\n"
        "0 I 0 1\n"
        "1 I 1 2\n"
        "2 U 0 1\n"
        "3 J 1 2 2\n"
        "4 R 2 1 3\n";
    cw_expression e = parse_cw_expression(text);
    CHECK(e.n == 2);
    CHECK(evaluate_cw_expression(e).g.m() == 1);
    std::string out = format_cw_expression(e);
    CHECK(format_cw_expression(parse_cw_expression(out)) == out);

    CHECK_THROWS_AS(parse_cw_expression("0 U 1 2\n"), input_error);
    CHECK_THROWS_AS(parse_cw_expression("0 I 0 1\n0 I 1 1\n"), input_error);
    CHECK_THROWS_AS(parse_cw_expression(""), input_error);
    CHECK_THROWS_AS(parse_cw_expression("0 X 1 2\n"), input_error);
}

TEST_CASE("relabel merges label classes") {
    cw_builder b;
    int a = b.introduce(0, 1);
    int c = b.introduce(1, 2);
    int u = b.disjoint_union(a, c);
    int r = b.relabel(2, 1, u);
    cw_expression e = b.finish(r);
    auto lg = evaluate_cw_expression(e);
    CHECK(lg.label == std::vector<int>{1, 1});
    CHECK(lg.g.m() == 0);
}

TEST_CASE("conversion from parse trees") {
    // single vertex: an introduce node and nothing else
    cw_expression one = parse_tree_to_cw_expression(modular_decompose(graph(1, {})));
    REQUIRE(one.nodes.size() == 1);
    CHECK(one.nodes[0].op == cw_op::introduce);

    // K2: introduce, introduce, union, join
    cw_expression k2 = parse_tree_to_cw_expression(modular_decompose(graph(2, {{0, 1}})));
    REQUIRE(k2.nodes.size() == 4);
    CHECK(k2.nodes[0].op == cw_op::introduce);
    CHECK(k2.nodes[1].op == cw_op::introduce);
    CHECK(k2.nodes[2].op == cw_op::disjoint_union);
    CHECK(k2.nodes[3].op == cw_op::join);

    cw_expression fig4 = parse_tree_to_cw_expression(modular_decompose(figure4_graph()));
    CHECK(fig4.labels <= 6);
    CHECK(evaluate_cw_expression(fig4).g == figure4_graph());
}

TEST_CASE("round-trip through decomposition on a corpus") {
    std::vector<graph> corpus = {figure3_graph(), figure4_graph(), figure6_graph(),
                                 figure7_graph()};
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        corpus.push_back(testutil::random_graph(3 + seed % 10, 0.1 + 0.09 * (seed % 10), seed));
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        corpus.push_back(gen_bounded_mw(18, 2 + seed % 5, seed));

    for (size_t i = 0; i < corpus.size(); ++i) {
        CAPTURE(i);
        const graph& g = corpus[i];
        parse_tree t = modular_decompose(g);
        cw_expression e = parse_tree_to_cw_expression(t);
        CHECK(evaluate_cw_expression(e).g == g);
        CHECK(e.labels <= std::max(t.prime_width, g.n() == 1 ? 1 : 2));
        CHECK(e.labels <= t.prime_width + 2);
    }
}

TEST_CASE("subexpression evaluation") {
    cw_builder b;
    int a = b.introduce(0, 1);
    int c = b.introduce(1, 2);
    int u = b.disjoint_union(a, c);
    int j = b.join(1, 2, u);
    cw_expression e = b.finish(j);
    auto sub = evaluate_cw_subexpression(e, u);
    CHECK(sub.g.m() == 0);
    CHECK(sub.g.n() == 2);
    auto full = evaluate_cw_subexpression(e, j);
    CHECK(full.g.m() == 1);
}
