#include "doctest.h"

#include <cmath>

#include "zf/exact.hpp"
#include "zf/models.hpp"
#include "zf/numeric.hpp"
#include "zf/pseudo.hpp"

#include "test_util.hpp"

using namespace zf;

TEST_CASE("pseudo-marginal of the empty set is exactly one") {
    auto g = build_hardcore(path_graph(4), Rat(1));
    auto nu = pseudo_marginal(g, NodeSet(), ColorAssignment{}, InterpolationKind::TypeI,
                              Rat(1), 3);
    CHECK(nu.c0_ratio == 1);
    CHECK(nu.exponent == 0);
}

TEST_CASE("pseudo-marginals approach Gibbs marginals under zero-freeness") {
    {
        // Single node, lambda = 1/2, sigma = occupied: mu = 1/3.
        auto g = build_hardcore(edgeless_graph(1), Rat(1, 2));
        auto nu = pseudo_marginal(g, NodeSet::single(0), ColorAssignment{{0, 1}},
                                  InterpolationKind::TypeI, Rat(1), 20);
        CHECK(std::abs(nu.value().approx - 1.0 / 3.0) < 1e-6);
    }
    {
        // Hard-core edge, lambda = 1/2, u unoccupied: mu = (1+l)/(1+2l) = 3/4.
        auto g = build_hardcore(path_graph(2), Rat(1, 2));
        auto nu = pseudo_marginal(g, NodeSet::single(0), ColorAssignment{{0, 0}},
                                  InterpolationKind::TypeI, Rat(1), 12);
        CHECK(std::abs(nu.value().approx - 0.75) < 0.05);
        auto better = pseudo_marginal(g, NodeSet::single(0), ColorAssignment{{0, 0}},
                                      InterpolationKind::TypeI, Rat(1), 40);
        CHECK(std::abs(better.value().approx - 0.75) <
              std::abs(nu.value().approx - 0.75));
    }
}

TEST_CASE("conditional pseudo-marginal degenerate forms") {
    auto g = build_proper_coloring(path_graph(5), 3);
    NodeSet S({0});
    ColorAssignment sigma{{0, 1}};
    auto unconditional = pseudo_marginal(g, S, sigma, InterpolationKind::TypeII, Rat(1), 2);
    auto with_empty_t = conditional_pseudo_marginal(g, S, sigma, NodeSet(), ColorAssignment{},
                                                    InterpolationKind::TypeII, Rat(1), 2);
    CHECK(unconditional == with_empty_t);

    // S inside T with matching colors: numerator and denominator coincide.
    NodeSet T({0, 1});
    ColorAssignment tau{{0, 1}, {1, 2}};
    auto one = conditional_pseudo_marginal(g, S, sigma, T, tau, InterpolationKind::TypeII,
                                           Rat(1), 2);
    CHECK(one.c0_ratio == 1);
    CHECK(one.exponent == 0);

    ColorAssignment clash{{0, 2}, {1, 2}};
    CHECK_THROWS_AS(static_cast<void>(conditional_pseudo_marginal(
                        g, S, sigma, T, clash, InterpolationKind::TypeII, Rat(1), 2)),
                    ConfigError);
}

TEST_CASE("theorem1: type I holds at R = m+2 for every sigma and tau") {
    auto g = build_hardcore(path_graph(7), Rat(1));
    for (int m = 1; m <= 3; ++m) {
        int R = min_admissible_radius(InterpolationKind::TypeI, m);
        CHECK(R == m + 2);
        for (int c = 0; c < 2; ++c) {
            auto rep = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, c}}, R,
                                      InterpolationKind::TypeI, m);
            CHECK(rep.holds);
            CHECK(!rep.vacuous);
            CHECK(rep.radius_ok);
            CHECK(rep.tau_checked + rep.tau_skipped_infeasible == rep.tau_considered);
        }
    }
}

TEST_CASE("theorem1: type I fails one step below the admissible radius") {
    auto g = build_hardcore(path_graph(7), Rat(1));
    bool any_violation = false;
    for (int c = 0; c < 2; ++c) {
        auto rep = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, c}}, 3,
                                  InterpolationKind::TypeI, 2);
        CHECK(!rep.radius_ok);
        if (!rep.holds) {
            any_violation = true;
            REQUIRE(rep.witness.has_value());
            CHECK(rep.witness->conditional_value != rep.witness->unconditional_value);
        }
    }
    CHECK(any_violation);
}

TEST_CASE("theorem1: the violation probe yields a concrete witness") {
    auto g = build_hardcore(path_graph(5), Rat(1));
    auto rep = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, 0}}, 1,
                              InterpolationKind::TypeI, 3);
    CHECK(!rep.holds);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->k == 2);
    CHECK(rep.witness->conditional_value == Rat(1, 2));
    CHECK(rep.witness->unconditional_value == Rat(3, 2));
}

TEST_CASE("theorem1: type II holds at R = 2m for all tau") {
    auto g = build_proper_coloring(path_graph(9), 3);
    for (int m = 1; m <= 2; ++m) {
        int R = min_admissible_radius(InterpolationKind::TypeII, m);
        CHECK(R == 2 * m);
        for (int c = 0; c < 3; ++c) {
            auto rep = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, c}}, R,
                                      InterpolationKind::TypeII, m);
            CHECK(rep.holds);
            CHECK(!rep.vacuous);
            CHECK(rep.tau_checked == rep.tau_considered);  // no feasibility caveat
        }
    }
    // Below the bound a witness exists.
    auto probe = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, 0}}, 1,
                                InterpolationKind::TypeII, 1);
    CHECK(!probe.holds);
    CHECK(probe.witness.has_value());
}

TEST_CASE("theorem1: decorated type II models") {
    {
        auto g = build_ising(path_graph(7), Rat(2), Rat(3, 2));
        auto rep = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, 1}}, 2,
                                  InterpolationKind::TypeII, 1);
        CHECK(rep.holds);
        CHECK(!rep.vacuous);
    }
    {
        ListColoringSpec spec{3, {{0, 1}, {0, 1, 2}, {1, 2}, {0, 1, 2}, {0, 2}, {0, 1, 2},
                                  {0, 1, 2}}};
        auto g = build_list_coloring(path_graph(7), spec);
        auto rep = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, 0}}, 2,
                                  InterpolationKind::TypeII, 1);
        CHECK(rep.holds);
    }
}

TEST_CASE("theorem1: vacuous beyond the eccentricity") {
    auto g = build_hardcore(path_graph(5), Rat(1));
    auto rep = theorem1_check(g, NodeSet::single(2), ColorAssignment{{2, 1}}, 3,
                              InterpolationKind::TypeI, 1);
    CHECK(rep.vacuous);
    CHECK(rep.holds);
}

TEST_CASE("theorem1: sampled boundary assignments on the grid") {
    auto g = build_proper_coloring(grid_graph(3, 3), 3);
    auto rep = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, 0}}, 2,
                              InterpolationKind::TypeII, 1, Budget{}, 5, 2024);
    CHECK(rep.sampled);
    CHECK(rep.holds);
    CHECK(rep.tau_considered == 5);
    CHECK_THROWS_AS(static_cast<void>(theorem1_check(g, NodeSet::single(0),
                                                     ColorAssignment{{0, 0}}, 2,
                                                     InterpolationKind::TypeII, 1, Budget{}, 5)),
                    ConfigError);  // sampled mode without a seed

    // m = 2: the R = 4 shell of a corner is the opposite corner alone.
    auto far = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, 0}}, 4,
                              InterpolationKind::TypeII, 2);
    CHECK(far.holds);
    CHECK(!far.vacuous);
    CHECK(far.tau_considered == 3);
    auto hc = theorem1_check(build_hardcore(grid_graph(3, 3), Rat(1)), NodeSet::single(0),
                             ColorAssignment{{0, 1}}, 3, InterpolationKind::TypeI, 1);
    CHECK(hc.holds);
    CHECK(!hc.vacuous);
}

TEST_CASE("interpolation accuracy rows") {
    auto k4 = build_hardcore(complete_graph(4), Rat(1, 2));
    {
        auto rows = interpolation_accuracy(k4, InterpolationKind::TypeII, 12);
        REQUIRE(rows.size() == 13);
        CHECK(rows[12].relative_error < 0.05);
        CHECK(rows[12].relative_error < rows[4].relative_error);
    }
    {
        // Type I on the same fixture violates unit-disc zero-freeness
        // (root at z = -1/2) and the truncation diverges.
        auto rows = interpolation_accuracy(k4, InterpolationKind::TypeI, 12);
        CHECK(rows[12].relative_error > 0.5);
    }
    {
        auto rows = interpolation_accuracy(build_hardcore(edgeless_graph(0), Rat(1)),
                                           InterpolationKind::TypeI, 0);
        CHECK(rows[0].relative_error == 0.0);  // empty graph: exact at m = 0
    }
    {
        auto rows = interpolation_accuracy(build_hardcore(edgeless_graph(3), Rat(0)),
                                           InterpolationKind::TypeI, 2);
        CHECK(rows[0].relative_error == 0.0);  // lambda = 0: Z = 1 = c_0
    }
    {
        auto rows = interpolation_accuracy(build_proper_coloring(path_graph(6), 5),
                                           InterpolationKind::TypeII, 12);
        CHECK(rows[12].relative_error < 1e-8);
        CHECK(rows[12].relative_error < rows[4].relative_error);
    }
    ListColoringSpec conflict{2, {{0}, {0}}};
    CHECK_THROWS_AS(static_cast<void>(interpolation_accuracy(
                        build_list_coloring(path_graph(2), conflict),
                        InterpolationKind::TypeII, 3)),
                    UndefinedError);
}

TEST_CASE("ssm scan descends and the pseudo gap vanishes under the radius rule") {
    auto g = build_hardcore(path_graph(9), Rat(1));
    auto rows = ssm_scan(g, NodeSet::single(4), {1, 2, 3, 4, 5}, InterpolationKind::TypeI, 1);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].rho == Rat(1, 2));
    CHECK(rows[3].rho == Rat(19, 442));
    CHECK(rows[0].rho > rows[3].rho);
    for (const auto& row : rows) {
        if (row.boundary_empty) {
            CHECK(row.rho == 0);
            continue;
        }
        CHECK(row.pseudo_gap_zero == row.radius_ok);
        if (!row.pseudo_gap_zero) CHECK(row.pseudo_gap > 0.0);
    }
    CHECK(rows[4].boundary_empty);  // R = 5 exceeds the eccentricity of the middle
}

TEST_CASE("conditional pseudo-marginal equals unconditional in the theorem regime") {
    auto g = build_hardcore(path_graph(7), Rat(2, 3));
    NodeSet S({0});
    ColorAssignment sigma{{0, 1}};
    NodeSet T = boundary(g, S, 3);
    // Termwise equality implies equality of nu at every z, not just z = 1.
    for (const Rat& z : {Rat(1), Rat(1, 3), Rat(-2, 5)}) {
        auto unc = pseudo_marginal(g, S, sigma, InterpolationKind::TypeI, z, 1);
        for (const auto& tau : zft::all_assignments(T.ids(), 2)) {
            PseudoMarginal cond;
            try {
                cond = conditional_pseudo_marginal(g, S, sigma, T, tau,
                                                   InterpolationKind::TypeI, z, 1);
            } catch (const UndefinedError&) {
                continue;
            }
            CHECK(cond == unc);
        }
    }
}

TEST_CASE("theorem1: type II covers boundary assignments with zero Gibbs weight") {
    // 2-colorings of the grid are the two checkerboards; most assignments to
    // the distance-2 shell of a corner have Z(G_{T,tau}) = 0 at z = 1, yet the
    // interpolation family keeps c_0 = L(G) and the equality must still hold.
    auto g = build_proper_coloring(grid_graph(3, 3), 2);
    NodeSet S({0});
    NodeSet T = boundary(g, S, 2);
    REQUIRE(T.size() == 3);
    long infeasible_at_1 = 0;
    for (const auto& tau : zft::all_assignments(T.ids(), 2)) {
        ColorAssignment full_tau;
        for (int u : T.ids()) full_tau.set(u, tau.color_of(u));
        if (sgn(restricted_partition(g, full_tau)) == 0) ++infeasible_at_1;
    }
    CHECK(infeasible_at_1 == 6);  // only the two checkerboard traces survive

    auto rep = theorem1_check(g, S, ColorAssignment{{0, 0}}, 2, InterpolationKind::TypeII, 1);
    CHECK(rep.holds);
    CHECK(rep.tau_checked == 8);  // every tau participates, none skipped
    CHECK(rep.tau_skipped_infeasible == 0);
}
