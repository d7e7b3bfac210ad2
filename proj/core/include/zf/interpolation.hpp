#pragma once

#include <optional>

#include "zf/budget.hpp"
#include "zf/graph.hpp"
#include "zf/models.hpp"
#include "zf/polynomial.hpp"

namespace zf {

enum class InterpolationKind { TypeI, TypeII };

/// Validates that g carries a hard-core decoration (K = 2, a^u = (1, lambda),
/// edge matrices [[1,1],[1,0]] masked consistently with g.pinned()). Returns
/// the fugacity, or nullopt if the decoration has any other shape.
std::optional<Rat> hardcore_shape(const DecoratedGraph& g);

/// Independent-set counts by size; counts[k] = i_k(G). If size_max >= 0 the
/// recursion stops at that size (larger counts are reported as 0).
std::vector<Int> independent_set_counts(const GraphStructure& gs, int size_max = -1,
                                        const Budget& budget = {});

/// Type I interpolation polynomial of a hard-core graph:
///   Z(G(z)) = sum_k i_k(G) lambda^k z^k,   c_0 = 1.
/// For a reduced hard-core graph the deterministic contribution of pinned
/// nodes is factored out: occupied pins contribute lambda but no z, so the
/// polynomial equals lambda^k * Z(Gtilde(z)) with Gtilde the graph left after
/// deleting pinned-out nodes and closed neighborhoods of pinned-in nodes.
/// Keeps the constant term nonzero for every feasible pinning; evaluating at
/// z = 1 still gives Z(G_{S,sigma}). An infeasible pinning (two adjacent
/// occupied pins) yields the zero polynomial.
RationalPolynomial type1_polynomial(const DecoratedGraph& g, const Budget& budget = {});

/// L(G) = prod_u sum_i a^u_i, the trivial value of the Type II family at z = 0.
Rat l_constant(const DecoratedGraph& g);

/// Type II interpolation polynomial: every edge matrix is replaced by
/// J + (A - J) z. Coefficients are recovered exactly from |E|+1 point
/// evaluations (each one a partition-function call with substituted matrices)
/// by Lagrange interpolation. Degree is at most |E|.
RationalPolynomial type2_polynomial(const DecoratedGraph& g, const Budget& budget = {});

/// Direct edge-subset expansion of the same polynomial:
///   coeff(z^i) = sum_{|E'|=i} sum_phi prod_u a^u prod_{e in E'} (A_e - 1).
/// Exponential in |E|; retained as a small-instance oracle.
RationalPolynomial type2_polynomial_subset_oracle(const DecoratedGraph& g,
                                                  const Budget& budget = {});

RationalPolynomial graph_polynomial(const DecoratedGraph& g, InterpolationKind kind,
                                    const Budget& budget = {});

/// i_k for k = 0..k_max. Computed by the independent-set recursion; for
/// k_max <= 4 the counts are recomputed from connected-subgraph counts
/// (pattern coefficients + Newton inversion) and the two routes must agree.
std::vector<Int> i_k_counts(const GraphStructure& gs, int k_max, const Budget& budget = {});

}  // namespace zf
