#include "zf/exact.hpp"

#include <algorithm>

#include "zf/enumerate.hpp"
#include "zf/rng.hpp"

namespace zf {

namespace {

Rat weighted_sum(const DecoratedGraph& g, const std::vector<int>& fixed, const Budget& budget,
                 const char* what) {
    detail::check_enumeration_budget(g, fixed, budget, what);
    Rat total(0);
    detail::enumerate_weighted(
        g, fixed, [&](int u, int c) -> const Rat& { return g.node_weight(u, c); },
        [&](int e, int clo, int chi) -> const Rat& { return g.edge_matrix(e).at(clo, chi); },
        [&](const std::vector<int>&, const Rat& w) { total += w; });
    return total;
}

/// Mixed-radix index of phi restricted to `nodes` (first node most significant).
std::size_t restriction_index(const std::vector<int>& phi, const std::vector<int>& nodes, int K) {
    std::size_t idx = 0;
    for (int u : nodes) idx = idx * K + static_cast<std::size_t>(phi[u]);
    return idx;
}

std::vector<int> assignment_from_index(std::size_t idx, std::size_t count, int K) {
    std::vector<int> colors(count, 0);
    for (std::size_t i = count; i-- > 0;) {
        colors[i] = static_cast<int>(idx % K);
        idx /= K;
    }
    return colors;
}

}  // namespace

Rat partition_exact(const DecoratedGraph& g, const Budget& budget) {
    std::vector<int> fixed(g.node_count(), -1);
    return weighted_sum(g, fixed, budget, "partition_exact");
}

Rat restricted_partition(const DecoratedGraph& g, const ColorAssignment& fixed_assign,
                         const Budget& budget) {
    auto fixed = detail::fixed_from_assignment(g, fixed_assign);
    return weighted_sum(g, fixed, budget, "restricted_partition");
}

Rat marginal(const DecoratedGraph& g, const NodeSet& S, const ColorAssignment& sigma,
             const Budget& budget) {
    for (int u : S.ids())
        if (!sigma.assigned(u)) throw ConfigError("marginal: sigma must color every node of S");
    Rat z = partition_exact(g, budget);
    if (sgn(z) == 0) throw UndefinedError("Gibbs measure undefined (Z = 0)");
    ColorAssignment on_s;
    for (int u : S.ids()) on_s.set(u, sigma.color_of(u));
    return restricted_partition(g, on_s, budget) / z;
}

Rat conditional_marginal(const DecoratedGraph& g, const NodeSet& S, const ColorAssignment& sigma,
                         const NodeSet& T, const ColorAssignment& tau, const Budget& budget) {
    ColorAssignment on_s, on_t;
    for (int u : S.ids()) {
        if (!sigma.assigned(u)) throw ConfigError("conditional_marginal: sigma incomplete on S");
        on_s.set(u, sigma.color_of(u));
    }
    for (int u : T.ids()) {
        if (!tau.assigned(u)) throw ConfigError("conditional_marginal: tau incomplete on T");
        on_t.set(u, tau.color_of(u));
    }
    Rat z_t = restricted_partition(g, on_t, budget);
    if (sgn(z_t) == 0) throw UndefinedError("conditioning event has probability zero");
    ColorAssignment joint = ColorAssignment::merged(on_s, on_t);
    return restricted_partition(g, joint, budget) / z_t;
}

MarginalTable marginal_table(const DecoratedGraph& g, const NodeSet& S, const Budget& budget) {
    const int K = g.color_count();
    for (int u : S.ids())
        if (u >= g.node_count()) throw ConfigError("marginal_table: node out of range");
    budget.check_colorings(K, static_cast<int>(S.size()), "marginal_table");

    Rat z = partition_exact(g, budget);
    if (sgn(z) == 0) throw UndefinedError("Gibbs measure undefined (Z = 0)");

    std::size_t table_size = 1;
    for (std::size_t i = 0; i < S.size(); ++i) table_size *= static_cast<std::size_t>(K);
    std::vector<Rat> acc(table_size, Rat(0));

    std::vector<int> fixed(g.node_count(), -1);
    detail::check_enumeration_budget(g, fixed, budget, "marginal_table");
    detail::enumerate_weighted(
        g, fixed, [&](int u, int c) -> const Rat& { return g.node_weight(u, c); },
        [&](int e, int clo, int chi) -> const Rat& { return g.edge_matrix(e).at(clo, chi); },
        [&](const std::vector<int>& phi, const Rat& w) {
            acc[restriction_index(phi, S.ids(), K)] += w;
        });

    MarginalTable out;
    out.S = S;
    for (std::size_t idx = 0; idx < table_size; ++idx)
        out.probabilities[assignment_from_index(idx, S.size(), K)] = acc[idx] / z;
    return out;
}

RhoReport rho_R(const DecoratedGraph& g, const NodeSet& S, int R, const Budget& budget,
                std::int64_t tau_budget, std::optional<std::uint64_t> seed) {
    if (S.empty()) throw ConfigError("rho_R: S is empty");
    RhoReport report;
    report.R = R;
    report.rho = 0;

    NodeSet T = boundary(g, S, R);
    if (T.empty()) return report;

    const int K = g.color_count();
    budget.check_colorings(K, static_cast<int>(S.size()), "rho_R (sigma table)");
    const std::size_t sigma_count = [&] {
        std::size_t c = 1;
        for (std::size_t i = 0; i < S.size(); ++i) c *= static_cast<std::size_t>(K);
        return c;
    }();

    Int tau_space = int_pow(static_cast<unsigned long>(K), static_cast<unsigned long>(T.size()));
    const bool full = tau_space <= Int(static_cast<long>(tau_budget));

    // minv/maxv over feasible tau of mu(S,sigma | T,tau), per sigma.
    std::vector<std::optional<Rat>> minv(sigma_count), maxv(sigma_count);
    auto absorb_column = [&](const std::vector<Rat>& joint, const Rat& z_tau) {
        for (std::size_t s = 0; s < sigma_count; ++s) {
            Rat mu = joint[s] / z_tau;
            if (!minv[s] || mu < *minv[s]) minv[s] = mu;
            if (!maxv[s] || mu > *maxv[s]) maxv[s] = mu;
        }
    };

    if (full) {
        report.tau_considered = static_cast<std::int64_t>(tau_space.get_si());
        const std::size_t tau_count = static_cast<std::size_t>(tau_space.get_ui());
        budget.check_colorings(K, static_cast<int>(S.size() + T.size()), "rho_R (table)");
        // One full pass classifying every coloring by (phi|S, phi|T).
        std::vector<int> fixed(g.node_count(), -1);
        detail::check_enumeration_budget(g, fixed, budget, "rho_R");
        std::vector<Rat> table(sigma_count * tau_count, Rat(0));
        detail::enumerate_weighted(
            g, fixed, [&](int u, int c) -> const Rat& { return g.node_weight(u, c); },
            [&](int e, int clo, int chi) -> const Rat& { return g.edge_matrix(e).at(clo, chi); },
            [&](const std::vector<int>& phi, const Rat& w) {
                std::size_t si = restriction_index(phi, S.ids(), K);
                std::size_t ti = restriction_index(phi, T.ids(), K);
                table[si * tau_count + ti] += w;
            });
        Rat z_total(0);
        for (const Rat& v : table) z_total += v;
        if (sgn(z_total) == 0) throw UndefinedError("Gibbs measure undefined (Z = 0)");

        std::vector<Rat> joint(sigma_count);
        for (std::size_t ti = 0; ti < tau_count; ++ti) {
            Rat z_tau(0);
            for (std::size_t s = 0; s < sigma_count; ++s) {
                joint[s] = table[s * tau_count + ti];
                z_tau += joint[s];
            }
            if (sgn(z_tau) == 0) continue;  // infeasible boundary condition
            ++report.tau_feasible;
            absorb_column(joint, z_tau);
        }
    } else {
        if (!seed) throw ConfigError("rho_R: seed required for sampled mode");
        report.sampled = true;
        report.tau_considered = tau_budget;
        Rng rng(*seed);
        for (std::int64_t it = 0; it < tau_budget; ++it) {
            ColorAssignment tau;
            for (int u : T.ids())
                tau.set(u, static_cast<int>(rng.below(static_cast<std::uint64_t>(K))));
            auto fixed = detail::fixed_from_assignment(g, tau);
            detail::check_enumeration_budget(g, fixed, budget, "rho_R (sampled)");
            std::vector<Rat> joint(sigma_count, Rat(0));
            Rat z_tau(0);
            detail::enumerate_weighted(
                g, fixed, [&](int u, int c) -> const Rat& { return g.node_weight(u, c); },
                [&](int e, int clo, int chi) -> const Rat& {
                    return g.edge_matrix(e).at(clo, chi);
                },
                [&](const std::vector<int>& phi, const Rat& w) {
                    joint[restriction_index(phi, S.ids(), K)] += w;
                    z_tau += w;
                });
            if (sgn(z_tau) == 0) continue;
            ++report.tau_feasible;
            absorb_column(joint, z_tau);
        }
        if (report.tau_feasible == 0)
            throw UndefinedError("all boundary conditions infeasible");
    }

    for (std::size_t s = 0; s < sigma_count; ++s) {
        if (!minv[s]) continue;
        Rat gap = *maxv[s] - *minv[s];
        if (gap > report.rho) report.rho = gap;
    }
    return report;
}

}  // namespace zf
