#include "doctest.h"

#include "zf/exact.hpp"
#include "zf/graph.hpp"
#include "zf/models.hpp"

#include "test_util.hpp"

using namespace zf;

TEST_CASE("reduce keeps only the assigned row on the pinned side") {
    auto g = build_hardcore(path_graph(2), Rat(1));
    auto r = reduce(g, ColorAssignment{{0, 1}});  // u occupied
    const EdgeMatrix& m = r.edge_matrix(0);
    CHECK(m.at(1, 0) == 1);  // occupied-unoccupied survives
    CHECK(m.at(1, 1) == 0);
    CHECK(m.at(0, 0) == 0);  // unoccupied rows zeroed
    CHECK(m.at(0, 1) == 0);
}

TEST_CASE("reduce with empty assignment is the identity") {
    Rng rng(11);
    auto g = zft::random_decorated(rng, 5, 3);
    auto r = reduce(g, ColorAssignment{});
    CHECK(partition_exact(r) == partition_exact(g));
    for (int e = 0; e < g.edge_count(); ++e) CHECK(r.edge_matrix(e) == g.edge_matrix(e));
}

TEST_CASE("reducing the middle of a 3-coloring path pins it") {
    auto g = build_proper_coloring(path_graph(3), 3);
    auto r = reduce(g, ColorAssignment{{1, 0}});
    // Brute-force over all 27 maps.
    Rat expect(0);
    std::vector<int> phi(3);
    for (phi[0] = 0; phi[0] < 3; ++phi[0])
        for (phi[1] = 0; phi[1] < 3; ++phi[1])
            for (phi[2] = 0; phi[2] < 3; ++phi[2])
                if (phi[1] == 0 && phi[0] != phi[1] && phi[1] != phi[2]) expect += 1;
    CHECK(expect == 4);
    CHECK(partition_exact(r) == expect);
}

TEST_CASE("reduce composition and idempotence") {
    Rng rng(23);
    for (int it = 0; it < 20; ++it) {
        auto g = zft::random_decorated(rng, 5, 2 + static_cast<int>(rng.below(2)));
        int u = 0, v = g.node_count() - 1;
        ColorAssignment a{{u, static_cast<int>(rng.below(2))}};
        ColorAssignment b{{v, static_cast<int>(rng.below(2))}};
        auto lhs = reduce(reduce(g, a), b);
        auto rhs = reduce(g, ColorAssignment::merged(a, b));
        for (int e = 0; e < g.edge_count(); ++e) CHECK(lhs.edge_matrix(e) == rhs.edge_matrix(e));
        auto twice = reduce(reduce(g, a), a);
        auto once = reduce(g, a);
        for (int e = 0; e < g.edge_count(); ++e)
            CHECK(twice.edge_matrix(e) == once.edge_matrix(e));
    }
}

TEST_CASE("reduce rejects conflicting assignments") {
    auto g = build_hardcore(path_graph(3), Rat(1));
    ColorAssignment a{{0, 1}};
    ColorAssignment b{{0, 0}};
    CHECK_THROWS_WITH_AS(static_cast<void>(ColorAssignment::merged(a, b)),
                         "conflicting assignment", ConfigError);
    auto r = reduce(g, a);
    CHECK_THROWS_AS(static_cast<void>(reduce(r, b)), ConfigError);
}

TEST_CASE("reduce changes only edge matrices") {
    Rng rng(5);
    auto g = zft::random_decorated(rng, 6, 3);
    auto r = reduce(g, ColorAssignment{{2, 1}});
    CHECK(r.node_count() == g.node_count());
    CHECK(r.edges() == g.edges());
    CHECK(r.color_count() == g.color_count());
    for (int u = 0; u < g.node_count(); ++u) CHECK(r.node_weights(u) == g.node_weights(u));
}

TEST_CASE("ball follows BFS distance") {
    auto g = build_hardcore(path_graph(5), Rat(1));
    CHECK(ball(g, NodeSet::single(2), 1) == NodeSet({1, 2, 3}));
    CHECK(ball(g, NodeSet::single(2), 0) == NodeSet({2}));
    auto c6 = build_hardcore(cycle_graph(6), Rat(1));
    CHECK(ball(c6, NodeSet::single(0), 3).size() == 6);
    CHECK_THROWS_AS(static_cast<void>(ball(g, NodeSet(), 1)), ConfigError);
}

TEST_CASE("boundary is the shell at exact distance") {
    auto g = build_hardcore(path_graph(5), Rat(1));
    CHECK(boundary(g, NodeSet::single(2), 2) == NodeSet({0, 4}));
    CHECK(boundary(g, NodeSet::single(2), 3).empty());  // beyond eccentricity, not an error
    CHECK_THROWS_AS(static_cast<void>(boundary(g, NodeSet::single(2), 0)), ConfigError);

    // Root has d children, internal nodes d-1: depth-2 shell of the d=3 tree
    // has 3*2 nodes.
    auto tree = build_hardcore(regular_tree(3, 3), Rat(1));
    CHECK(boundary(tree, NodeSet::single(0), 2).size() == 6);
}

TEST_CASE("ball monotone, boundaries disjoint") {
    Rng rng(31);
    for (int it = 0; it < 10; ++it) {
        auto g = zft::random_decorated(rng, 7, 2);
        NodeSet s({static_cast<int>(rng.below(7))});
        for (int r = 0; r < 3; ++r) {
            auto inner = ball(g, s, r);
            auto outer = ball(g, s, r + 1);
            for (int u : inner.ids()) CHECK(outer.contains(u));
        }
        auto b1 = boundary(g, s, 1);
        auto b2 = boundary(g, s, 2);
        for (int u : b1.ids()) CHECK(!b2.contains(u));
    }
}

TEST_CASE("disjoint union shifts indices and factorizes Z") {
    auto a = build_hardcore(edgeless_graph(1), Rat(1));
    auto b = disjoint_union(a, a);
    CHECK(b.node_count() == 2);
    CHECK(b.edge_count() == 0);

    auto k3 = build_hardcore(complete_graph(3), Rat(1));
    auto k2 = build_hardcore(path_graph(2), Rat(1));
    CHECK(disjoint_union(k3, k2).edge_count() == 4);

    Rng rng(47);
    for (int it = 0; it < 10; ++it) {
        int K = 2 + static_cast<int>(rng.below(2));
        auto g1 = zft::random_decorated(rng, 4, K);
        auto g2 = zft::random_decorated(rng, 4, K);
        CHECK(partition_exact(disjoint_union(g1, g2)) ==
              partition_exact(g1) * partition_exact(g2));
    }
}

TEST_CASE("disjoint union requires matching K and is associative in Z") {
    auto g2 = build_hardcore(path_graph(2), Rat(1));
    auto g3 = build_proper_coloring(path_graph(2), 3);
    CHECK_THROWS_AS(static_cast<void>(disjoint_union(g2, g3)), ConfigError);

    Rng rng(59);
    auto a = zft::random_decorated(rng, 3, 2);
    auto b = zft::random_decorated(rng, 4, 2);
    auto c = zft::random_decorated(rng, 3, 2);
    CHECK(partition_exact(disjoint_union(disjoint_union(a, b), c)) ==
          partition_exact(disjoint_union(a, disjoint_union(b, c))));
}

TEST_CASE("graph validation rejects malformed input") {
    CHECK_THROWS_AS(DecoratedGraph(2, 2, {{0, 0}}, {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
                                   {EdgeMatrix(2, Rat(1))}),
                    ConfigError);  // self-loop
    CHECK_THROWS_AS(DecoratedGraph(2, 2, {{1, 0}}, {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
                                   {EdgeMatrix(2, Rat(1))}),
                    ConfigError);  // orientation
    CHECK_THROWS_AS(DecoratedGraph(2, 2, {{0, 1}, {0, 1}},
                                   {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
                                   {EdgeMatrix(2, Rat(1)), EdgeMatrix(2, Rat(1))}),
                    ConfigError);  // duplicate edge
    CHECK_THROWS_AS(DecoratedGraph(1, 2, {}, {{Rat(-1), Rat(1)}}, {}), ConfigError);
}

TEST_CASE("weights are canonicalized on construction") {
    Rat raw(2, 4);  // mpq_class does not reduce on its own
    DecoratedGraph g(1, 2, {}, {{raw, raw}}, {});
    CHECK(g.node_weight(0, 0) == Rat(1, 2));
    CHECK(rat_to_string(g.node_weight(0, 0)) == "1/2");
}

TEST_CASE("edge weights transpose against the stored orientation") {
    Rng rng(61);
    auto g = zft::random_decorated(rng, 4, 3);
    for (auto [u, v] : g.edges())
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(g.edge_weight(u, v, i, j) == g.edge_weight(v, u, j, i));
}
