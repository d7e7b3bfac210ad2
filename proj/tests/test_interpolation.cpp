#include "doctest.h"

#include "zf/exact.hpp"
#include "zf/interpolation.hpp"
#include "zf/models.hpp"

#include "test_util.hpp"

using namespace zf;

namespace {

std::vector<Int> ik_subset_oracle(const GraphStructure& gs) {
    std::vector<Int> counts(static_cast<std::size_t>(gs.n) + 1, Int(0));
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << gs.n); ++mask) {
        bool ok = true;
        for (auto [u, v] : gs.edges)
            if (((mask >> u) & 1) && ((mask >> v) & 1)) ok = false;
        if (ok) counts[static_cast<std::size_t>(__builtin_popcount(mask))] += 1;
    }
    return counts;
}

}  // namespace

TEST_CASE("type1 polynomial on plain hard-core graphs") {
    auto single = build_hardcore(edgeless_graph(1), Rat(2));
    CHECK(type1_polynomial(single).coeffs() == std::vector<Rat>{Rat(1), Rat(2)});

    auto c4 = build_hardcore(cycle_graph(4), Rat(1));
    auto p = type1_polynomial(c4);
    auto ik = ik_subset_oracle(cycle_graph(4));
    REQUIRE(p.degree() == 2);
    for (int k = 0; k <= 2; ++k) CHECK(p.coeff(k) == Rat(ik[static_cast<std::size_t>(k)]));

    auto k3 = build_hardcore(complete_graph(3), Rat(1, 2));
    CHECK(type1_polynomial(k3).coeffs() == std::vector<Rat>{Rat(1), Rat(3, 2)});

    CHECK_THROWS_WITH_AS(static_cast<void>(type1_polynomial(
                             build_proper_coloring(path_graph(3), 3))),
                         "type1_polynomial: non-hard-core decoration", ConfigError);
}

TEST_CASE("type1 endpoints across the panel") {
    for (const Rat& lambda : {Rat(1), Rat(1, 2), Rat(2)}) {
        for (const auto& gs : {path_graph(6), cycle_graph(8), grid_graph(2, 3),
                               complete_graph(4), regular_tree(3, 2)}) {
            auto g = build_hardcore(gs, lambda);
            auto p = type1_polynomial(g);
            CHECK(p.evaluate(Rat(1)) == partition_exact(g));
            CHECK(p.evaluate(Rat(0)) == 1);
        }
    }
}

TEST_CASE("type1 polynomial of a reduced graph factors out pinned nodes") {
    Rng rng(71);
    for (int it = 0; it < 15; ++it) {
        GraphStructure gs = erdos_renyi(5, Rat(1, 2), rng);
        Rat lambda = zft::random_positive_rat(rng);
        auto g = build_hardcore(gs, lambda);
        ColorAssignment assign;
        assign.set(static_cast<int>(rng.below(4)), static_cast<int>(rng.below(2)));
        if (rng.below(2) == 0) assign.set(4, static_cast<int>(rng.below(2)));

        auto reduced = reduce(g, assign);
        auto p = type1_polynomial(reduced);
        HardcoreReduction hr = hardcore_reduce_structure(gs, assign);
        if (!hr.feasible) {
            CHECK(p.is_zero());
            continue;
        }
        // p == lambda^pins * Z(Gtilde(z)).
        auto surgery = type1_polynomial(build_hardcore(hr.structure, lambda)) *
                       rat_pow(lambda, static_cast<unsigned long>(hr.occupied_pins));
        CHECK(p == surgery);
        CHECK(p.coeff(0) == rat_pow(lambda, static_cast<unsigned long>(hr.occupied_pins)));
        // Evaluating at 1 recovers the reduced partition function whenever the
        // pinned nodes actually have incident edges.
        bool covered = true;
        for (const auto& [node, color] : assign.entries())
            if (g.degree(node) == 0) covered = false;
        if (covered) CHECK(p.evaluate(Rat(1)) == partition_exact(reduced));
    }
}

TEST_CASE("type1 pinning is enforced even on isolated nodes") {
    // The edge-zeroing reduction cannot touch an isolated node, but the
    // interpolation's polynomial still respects the recorded pin.
    auto g = build_hardcore(edgeless_graph(1), Rat(1, 2));
    auto r = reduce(g, ColorAssignment{{0, 1}});
    auto p = type1_polynomial(r);
    CHECK(p.coeffs() == std::vector<Rat>{Rat(1, 2)});
    CHECK(partition_exact(r) == Rat(3, 2));  // decoration alone is unchanged
}

TEST_CASE("type2 polynomial examples") {
    auto lonely = build_proper_coloring(edgeless_graph(3), 4);
    CHECK(type2_polynomial(lonely) == RationalPolynomial::constant(Rat(64)));

    auto edge2 = build_proper_coloring(path_graph(2), 2);
    CHECK(type2_polynomial(edge2).coeffs() == std::vector<Rat>{Rat(4), Rat(-2)});

    auto k3 = build_proper_coloring(complete_graph(3), 3);
    auto p = type2_polynomial(k3);
    CHECK(p.evaluate(Rat(1)) == 6);
    CHECK(p.evaluate(Rat(0)) == 27);
}

TEST_CASE("type2 endpoints and the subset-expansion oracle") {
    std::vector<DecoratedGraph> panel;
    panel.push_back(build_proper_coloring(path_graph(4), 3));
    panel.push_back(build_proper_coloring(cycle_graph(5), 3));
    panel.push_back(build_ising(grid_graph(2, 3), Rat(2), Rat(3, 2)));
    panel.push_back(build_hardcore(cycle_graph(6), Rat(2)));
    {
        ListColoringSpec spec{3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}}};
        panel.push_back(build_list_coloring(path_graph(4), spec));
    }
    for (const auto& g : panel) {
        auto p = type2_polynomial(g);
        CHECK(p.evaluate(Rat(1)) == partition_exact(g));
        CHECK(p.evaluate(Rat(0)) == l_constant(g));
        CHECK(p == type2_polynomial_subset_oracle(g));
        CHECK(p.degree() <= g.edge_count());
    }
}

TEST_CASE("type2 polynomial of reduced graphs keeps the trivial endpoint") {
    Rng rng(73);
    for (int it = 0; it < 8; ++it) {
        auto g = zft::random_decorated(rng, 5, 3);
        int u = zft::some_covered_node(g);
        auto reduced = reduce(g, ColorAssignment{{u, static_cast<int>(rng.below(3))}});
        auto p = type2_polynomial(reduced);
        CHECK(p.evaluate(Rat(0)) == l_constant(g));  // L is insensitive to reduction
        CHECK(p.evaluate(Rat(1)) == partition_exact(reduced));
    }
}

TEST_CASE("interpolation polynomial of a union is the product") {
    Rng rng(79);
    auto a = erdos_renyi(4, Rat(1, 2), rng);
    auto b = erdos_renyi(3, Rat(1, 2), rng);
    auto ha = build_hardcore(a, Rat(2, 3));
    auto hb = build_hardcore(b, Rat(2, 3));
    CHECK(type1_polynomial(disjoint_union(ha, hb)) ==
          type1_polynomial(ha) * type1_polynomial(hb));

    auto ca = build_proper_coloring(a, 3);
    auto cb = build_proper_coloring(b, 3);
    CHECK(type2_polynomial(disjoint_union(ca, cb)) ==
          type2_polynomial(ca) * type2_polynomial(cb));
}

TEST_CASE("i_k counts with the connected-route cross-check") {
    CHECK(i_k_counts(complete_graph(3), 3) ==
          std::vector<Int>{Int(1), Int(3), Int(0), Int(0)});
    CHECK(i_k_counts(cycle_graph(4), 4) ==
          std::vector<Int>{Int(1), Int(4), Int(2), Int(0), Int(0)});
    CHECK(i_k_counts(path_graph(2), 2) == std::vector<Int>{Int(1), Int(2), Int(0)});

    Rng rng(83);
    for (int it = 0; it < 6; ++it) {
        GraphStructure gs = erdos_renyi(7, Rat(1, 2), rng);
        auto counts = i_k_counts(gs, 4);  // throws if the two routes disagree
        auto oracle = ik_subset_oracle(gs);
        for (int k = 0; k <= 4; ++k)
            CHECK(counts[static_cast<std::size_t>(k)] ==
                  (k < static_cast<int>(oracle.size()) ? oracle[static_cast<std::size_t>(k)]
                                                       : Int(0)));
    }
    CHECK(i_k_counts(grid_graph(3, 3), 4).back() == 6);
}

TEST_CASE("polynomial evaluation and Lagrange interpolation") {
    RationalPolynomial p({Rat(1), Rat(2)});
    CHECK(p.evaluate(Rat(1)) == 3);
    CHECK(p.evaluate(Rat(0)) == 1);

    Rng rng(89);
    for (int it = 0; it < 10; ++it) {
        std::vector<Rat> coeffs;
        int deg = 1 + static_cast<int>(rng.below(6));
        for (int i = 0; i <= deg; ++i)
            coeffs.push_back(make_rat(static_cast<long>(rng.below(19)) - 9,
                                 1 + static_cast<long>(rng.below(4))));
        RationalPolynomial q(std::move(coeffs));
        std::vector<std::pair<Rat, Rat>> pts;
        for (int t = 0; t <= deg; ++t) pts.emplace_back(Rat(t), q.evaluate(Rat(t)));
        CHECK(RationalPolynomial::lagrange_interpolate(pts) == q);
    }
    CHECK_THROWS_AS(static_cast<void>(RationalPolynomial::lagrange_interpolate(
                        {{Rat(0), Rat(1)}, {Rat(0), Rat(2)}})),
                    ConfigError);
}
