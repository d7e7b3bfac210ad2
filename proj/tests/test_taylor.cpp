#include "doctest.h"

#include "zf/interpolation.hpp"
#include "zf/models.hpp"
#include "zf/numeric.hpp"
#include "zf/power_sums.hpp"

#include "test_util.hpp"

using namespace zf;

namespace {

RationalPolynomial poly_from_inverse_roots(const std::vector<Rat>& roots) {
    // p(z) = prod (1 - z / zeta_j); inverse power sums are sums of zeta^-k.
    RationalPolynomial p = RationalPolynomial::constant(Rat(1));
    for (const Rat& zeta : roots) p = p * RationalPolynomial({Rat(1), Rat(-1) / zeta});
    return p;
}

RationalPolynomial random_poly(Rng& rng, int deg) {
    std::vector<Rat> c;
    c.push_back(make_rat(1 + static_cast<long>(rng.below(5)), 1 + static_cast<long>(rng.below(3))));
    for (int i = 1; i <= deg; ++i)
        c.push_back(
            make_rat(static_cast<long>(rng.below(19)) - 9, 1 + static_cast<long>(rng.below(4))));
    return RationalPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("newton recursion on spelled-out cases") {
    RationalPolynomial p({Rat(1), Rat(-3), Rat(2)});  // (1 - z)(1 - 2z)
    auto r = power_sums_newton(p, 3);
    CHECK(r.at(1) == 3);
    CHECK(r.at(2) == 5);
    CHECK(r.at(3) == 9);

    auto flat = power_sums_newton(RationalPolynomial::constant(Rat(1)), 4);
    for (int k = 1; k <= 4; ++k) CHECK(flat.at(k) == 0);

    RationalPolynomial q({Rat(1), Rat(1)});  // root -1
    auto rq = power_sums_newton(q, 3);
    CHECK(rq.at(1) == -1);
    CHECK(rq.at(2) == 1);
    CHECK(rq.at(3) == -1);

    CHECK_THROWS_WITH_AS(static_cast<void>(power_sums_newton(
                             RationalPolynomial({Rat(0), Rat(1)}), 2)),
                         "constant term vanishes; Roots undefined", UndefinedError);
}

TEST_CASE("girard formula equals newton on random polynomials") {
    Rng rng(113);
    for (int it = 0; it < 25; ++it) {
        RationalPolynomial p = random_poly(rng, 1 + static_cast<int>(rng.below(10)));
        int m = 1 + static_cast<int>(rng.below(10));
        auto a = power_sums_newton(p, m);
        auto b = power_sums_girard(p, m);
        for (int k = 1; k <= m; ++k) CHECK(a.at(k) == b.at(k));
    }
    // r_1 = -c_1 / c_0 always.
    RationalPolynomial p({Rat(5), Rat(3), Rat(7)});
    CHECK(power_sums_girard(p, 1).at(1) == Rat(-3, 5));
}

TEST_CASE("power sums match direct inverse-root summation on planted roots") {
    Rng rng(127);
    for (int it = 0; it < 12; ++it) {
        std::vector<Rat> roots;
        int deg = 1 + static_cast<int>(rng.below(5));
        for (int j = 0; j < deg; ++j) {
            long num = 1 + static_cast<long>(rng.below(4));
            long den = 1 + static_cast<long>(rng.below(3));
            roots.push_back(make_rat(rng.below(2) ? num : -num, den));
        }
        RationalPolynomial p = poly_from_inverse_roots(roots);
        auto table = power_sums_newton(p, 6);
        for (int k = 1; k <= 6; ++k) {
            Rat direct(0);
            for (const Rat& zeta : roots) direct += rat_pow(Rat(1) / zeta,
                                                             static_cast<unsigned long>(k));
            CHECK(table.at(k) == direct);
        }
    }
}

TEST_CASE("taylor coefficients are the true log-series coefficients") {
    // Symbolic oracle for deg <= 3: log(1 + b1 z + b2 z^2 + b3 z^3) =
    //   b1 z + (b2 - b1^2/2) z^2 + (b3 - b1 b2 + b1^3/3) z^3 + ...
    Rng rng(131);
    for (int it = 0; it < 20; ++it) {
        Rat b1 = make_rat(static_cast<long>(rng.below(9)) - 4, 1 + static_cast<long>(rng.below(3)));
        Rat b2 = make_rat(static_cast<long>(rng.below(9)) - 4, 1 + static_cast<long>(rng.below(3)));
        Rat b3 = make_rat(static_cast<long>(rng.below(9)) - 4, 1 + static_cast<long>(rng.below(3)));
        Rat c0 = zft::random_positive_rat(rng);
        RationalPolynomial p({c0, b1 * c0, b2 * c0, b3 * c0});
        TaylorApprox t = taylor_truncation(p, 3);
        CHECK(t.constant == c0);
        CHECK(t.coeff(1) == b1);
        CHECK(t.coeff(2) == b2 - b1 * b1 / 2);
        CHECK(t.coeff(3) == b3 - b1 * b2 + b1 * b1 * b1 / 3);
    }

    // Closed form for p = 1 + lambda z: t_k = (-1)^(k+1) lambda^k / k.
    Rat lambda(2, 3);
    TaylorApprox t = taylor_truncation(RationalPolynomial({Rat(1), lambda}), 6);
    for (int k = 1; k <= 6; ++k) {
        Rat expect = rat_pow(lambda, static_cast<unsigned long>(k)) / k;
        if (k % 2 == 0) expect = -expect;
        CHECK(t.coeff(k) == expect);
    }

    TaylorApprox trivial = taylor_truncation(RationalPolynomial::constant(Rat(1)), 5);
    for (int k = 1; k <= 5; ++k) CHECK(trivial.coeff(k) == 0);
    CHECK(trivial.exponent_at(Rat(1)) == 0);
}

TEST_CASE("exp(T_m) converges geometrically for a zero-free polynomial") {
    RationalPolynomial p({Rat(1), Rat(-1, 2)});  // root at 2, value 1/2 at z = 1
    double prev = 0;
    for (int m = 1; m <= 12; ++m) {
        TaylorApprox t = taylor_truncation(p, m);
        double err = std::abs(render_exp(t.constant, t.exponent_at(Rat(1))).approx - 0.5);
        if (m > 1) CHECK(err < 0.62 * prev);  // error roughly halves per term
        prev = err;
    }
    CHECK(prev < 1e-5);
}

TEST_CASE("power sums add over disjoint unions") {
    auto single = build_hardcore(edgeless_graph(1), Rat(1));
    CHECK(power_sums_additive_check(single, single, InterpolationKind::TypeI, 4));
    {
        auto u = disjoint_union(single, single);
        auto r1 = power_sums_newton(type1_polynomial(single), 4);
        auto ru = power_sums_newton(type1_polynomial(u), 4);
        for (int k = 1; k <= 4; ++k) CHECK(ru.at(k) == 2 * r1.at(k));
    }

    Rng rng(137);
    for (int it = 0; it < 6; ++it) {
        auto a = build_hardcore(erdos_renyi(3, Rat(1, 2), rng), Rat(1, 2));
        auto b = build_hardcore(erdos_renyi(4, Rat(1, 2), rng), Rat(1, 2));
        CHECK(power_sums_additive_check(a, b, InterpolationKind::TypeI, 5));
    }
    for (int it = 0; it < 4; ++it) {
        auto a = build_proper_coloring(erdos_renyi(3, Rat(1, 2), rng), 3);
        auto b = build_proper_coloring(erdos_renyi(4, Rat(1, 2), rng), 3);
        CHECK(power_sums_additive_check(a, b, InterpolationKind::TypeII, 5));
    }
}

TEST_CASE("numeric rendering carries its precision") {
    auto r = render_exp(Rat(2), Rat(0), 128);
    CHECK(r.precision_bits == 128);
    CHECK(r.approx == doctest::Approx(2.0));
    auto r2 = render_exp(Rat(1), Rat(1), 256);
    CHECK(r2.approx == doctest::Approx(std::exp(1.0)));
    CHECK(render_exp(Rat(1), Rat(1), 128).decimal == render_exp(Rat(1), Rat(1), 128).decimal);
}

TEST_CASE("complex z lives only in the numeric layer") {
    // On the real axis the complex evaluation agrees with the exact rendering.
    RationalPolynomial p({Rat(1), Rat(1, 3), Rat(-1, 4)});
    TaylorApprox t = taylor_truncation(p, 5);
    auto real_value = render_exp(t.constant, t.exponent_at(Rat(1, 2)));
    auto complex_value = exp_taylor_complex(t.constant, t.t, {0.5, 0.0});
    CHECK(std::abs(complex_value.imag()) < 1e-12);
    CHECK(complex_value.real() == doctest::Approx(real_value.approx));
    // Conjugate symmetry for real coefficients.
    auto up = exp_taylor_complex(t.constant, t.t, {0.3, 0.2});
    auto down = exp_taylor_complex(t.constant, t.t, {0.3, -0.2});
    CHECK(up.real() == doctest::Approx(down.real()));
    CHECK(up.imag() == doctest::Approx(-down.imag()));
}
