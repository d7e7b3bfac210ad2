#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "zf/budget.hpp"
#include "zf/graph.hpp"

namespace zf {

/// Z(G) = sum over all colorings phi of prod a^u_{phi(u)} prod A_{phi(u),phi(v)},
/// by full enumeration in deterministic mixed-radix order. Exact.
Rat partition_exact(const DecoratedGraph& g, const Budget& budget = {});

/// Sum of coloring weights over phi agreeing with `fixed` on its domain.
Rat restricted_partition(const DecoratedGraph& g, const ColorAssignment& fixed,
                         const Budget& budget = {});

/// Gibbs marginal mu(G, S, sigma), computed by direct conditioning on the
/// definition (not via the reduction identity; the two are compared in tests).
/// Requires Z(G) != 0.
Rat marginal(const DecoratedGraph& g, const NodeSet& S, const ColorAssignment& sigma,
             const Budget& budget = {});

/// mu(G, S, sigma | T, tau). Requires mu(T, tau) > 0.
Rat conditional_marginal(const DecoratedGraph& g, const NodeSet& S, const ColorAssignment& sigma,
                         const NodeSet& T, const ColorAssignment& tau, const Budget& budget = {});

/// Full marginal distribution of a subset: every coloring of S with its exact
/// probability. Values sum to 1 whenever Z(G) > 0.
struct MarginalTable {
    NodeSet S;
    std::map<std::vector<int>, Rat> probabilities;
};
MarginalTable marginal_table(const DecoratedGraph& g, const NodeSet& S,
                             const Budget& budget = {});

/// Worst-case sensitivity of the conditional marginal on S to the boundary
/// condition at distance exactly R:
///   rho_R = max_sigma max_{tau1,tau2 feasible} |mu(S,sigma|tau1) - mu(S,sigma|tau2)|.
/// Zero-probability boundary conditions are excluded. Returns 0 when the
/// boundary is empty. When the boundary has more than `tau_budget` assignments
/// a seeded sample of boundary conditions is used instead and the result is a
/// lower bound (`sampled` = true); a seed is then mandatory.
struct RhoReport {
    Rat rho;
    int R = 0;
    bool sampled = false;          // true => rho is a lower bound
    std::int64_t tau_feasible = 0;
    std::int64_t tau_considered = 0;
};
RhoReport rho_R(const DecoratedGraph& g, const NodeSet& S, int R, const Budget& budget = {},
                std::int64_t tau_budget = 4096,
                std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace zf
