#pragma once

#include <vector>

#include "zf/budget.hpp"
#include "zf/graph.hpp"
#include "zf/interpolation.hpp"
#include "zf/polynomial.hpp"

namespace zf {

/// Power sums of inverse roots: r_k = Roots(p, k) = sum_j zeta_j^{-k} over the
/// (nonzero) complex roots of p. Requires a nonzero constant term.
struct PowerSumTable {
    int m = 0;
    std::vector<Rat> r;  // r[k-1] = Roots(p, k), k = 1..m

    const Rat& at(int k) const { return r.at(static_cast<std::size_t>(k) - 1); }
};

/// Newton's identity, run as a recursion on the c_0-normalized coefficients:
///   k c_k = -sum_{i=0}^{k-1} c_i Roots(p, k-i),  with c_k = 0 for k > deg.
PowerSumTable power_sums_newton(const RationalPolynomial& p, int m);

/// Girard's explicit formula: a sum over compositions m_1 + 2 m_2 + ... + k m_k = k
/// of multinomial terms in the normalized coefficients, with big-integer
/// factorials. Must agree with power_sums_newton exactly.
PowerSumTable power_sums_girard(const RationalPolynomial& p, int m);

/// Truncated Taylor expansion of f(z) = log p(z) at z = 0.
///
/// The constant term f(0) = log c_0 is carried multiplicatively: `constant`
/// stores c_0 itself and no numeric log is taken until final reporting, so
/// ratios of exp(T_m) values stay exact. The order-k coefficient is the true
/// log-series coefficient
///   t_k = f^(k)(0) / k! = -Roots(p, k) / k,
/// validated against a symbolic differentiation oracle in the tests.
struct TaylorApprox {
    int m = 0;
    Rat constant;        // c_0, the value whose log is the order-0 term
    std::vector<Rat> t;  // t[k-1] = t_k, k = 1..m

    const Rat& coeff(int k) const { return t.at(static_cast<std::size_t>(k) - 1); }

    /// sum_{k=1..m} t_k z^k, exact. exp(T_m(z)) = constant * exp(exponent_at(z)).
    Rat exponent_at(const Rat& z) const;
};

TaylorApprox taylor_truncation(const RationalPolynomial& p, int m);

/// Roots additivity over disjoint unions: the power-sum table of the union's
/// interpolation polynomial must equal the sum of the parts' tables.
bool power_sums_additive_check(const DecoratedGraph& g1, const DecoratedGraph& g2,
                               InterpolationKind kind, int m, const Budget& budget = {});

}  // namespace zf
