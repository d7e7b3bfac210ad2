#include "zf/pseudo.hpp"

#include <algorithm>

#include "zf/rng.hpp"

namespace zf {

namespace {

ColorAssignment restrict_to(const ColorAssignment& a, const NodeSet& s, const char* what) {
    ColorAssignment out;
    for (int u : s.ids()) {
        if (!a.assigned(u)) throw ConfigError(std::string(what) + ": assignment incomplete");
        out.set(u, a.color_of(u));
    }
    return out;
}

ColorAssignment assignment_on(const NodeSet& s, const std::vector<int>& colors) {
    ColorAssignment out;
    const auto& ids = s.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) out.set(ids[i], colors[i]);
    return out;
}

std::vector<int> colors_from_index(Int idx, std::size_t count, int K) {
    std::vector<int> colors(count, 0);
    for (std::size_t i = count; i-- > 0;) {
        Int rem = idx % K;
        colors[i] = static_cast<int>(rem.get_si());
        idx /= K;
    }
    return colors;
}

void require_type2_nondegenerate(const DecoratedGraph& g, InterpolationKind kind) {
    if (kind != InterpolationKind::TypeII) return;
    for (int u = 0; u < g.node_count(); ++u) {
        Rat s(0);
        for (int c = 0; c < g.color_count(); ++c) s += g.node_weight(u, c);
        if (sgn(s) == 0)
            throw UndefinedError("L(G) = 0: node " + std::to_string(u) +
                                 " has an all-zero weight vector");
    }
}

}  // namespace

TaylorApprox graph_taylor(const DecoratedGraph& g, InterpolationKind kind, int m,
                          const Budget& budget) {
    return taylor_truncation(graph_polynomial(g, kind, budget), m);
}

PseudoMarginal pseudo_marginal(const DecoratedGraph& g, const NodeSet& S,
                               const ColorAssignment& sigma, InterpolationKind kind, const Rat& z,
                               int m, const Budget& budget) {
    require_type2_nondegenerate(g, kind);
    ColorAssignment on_s = restrict_to(sigma, S, "pseudo_marginal");
    TaylorApprox den = graph_taylor(g, kind, m, budget);
    TaylorApprox num = graph_taylor(reduce(g, on_s), kind, m, budget);
    PseudoMarginal out;
    out.m = m;
    out.z = z;
    out.c0_ratio = num.constant / den.constant;
    out.exponent = num.exponent_at(z) - den.exponent_at(z);
    return out;
}

PseudoMarginal conditional_pseudo_marginal(const DecoratedGraph& g, const NodeSet& S,
                                           const ColorAssignment& sigma, const NodeSet& T,
                                           const ColorAssignment& tau, InterpolationKind kind,
                                           const Rat& z, int m, const Budget& budget) {
    require_type2_nondegenerate(g, kind);
    ColorAssignment on_s = restrict_to(sigma, S, "conditional_pseudo_marginal");
    ColorAssignment on_t = restrict_to(tau, T, "conditional_pseudo_marginal");
    ColorAssignment joint = ColorAssignment::merged(on_s, on_t);  // conflict check
    TaylorApprox den = graph_taylor(reduce(g, on_t), kind, m, budget);
    TaylorApprox num = graph_taylor(reduce(g, joint), kind, m, budget);
    PseudoMarginal out;
    out.m = m;
    out.z = z;
    out.c0_ratio = num.constant / den.constant;
    out.exponent = num.exponent_at(z) - den.exponent_at(z);
    return out;
}

int min_admissible_radius(InterpolationKind kind, int m) {
    return kind == InterpolationKind::TypeI ? m + 2 : 2 * m;
}

namespace {

const char* kRadiusNote =
    "radius rule: type1 requires R >= m+2 (occupied pins delete closed neighborhoods, "
    "so reduction zones extend one step past S and the boundary); type2 requires "
    "R >= 2m (order-k terms involve connected decorated subgraphs on up to 2k nodes). "
    "The published statement pairs truncation R/2 with radius R and its proof remark "
    "claims R >= m for type1; the exact checks here validate the rule above and "
    "produce witnesses below it.";

}  // namespace

Theorem1Report theorem1_check(const DecoratedGraph& g, const NodeSet& S,
                              const ColorAssignment& sigma, int R, InterpolationKind kind, int m,
                              const Budget& budget, std::int64_t tau_budget,
                              std::optional<std::uint64_t> seed) {
    if (R < 1) throw ConfigError("theorem1_check: R must be >= 1");
    if (m < 0) throw ConfigError("theorem1_check: m must be >= 0");
    require_type2_nondegenerate(g, kind);

    Theorem1Report report;
    report.R = R;
    report.m = m;
    report.kind = kind;
    report.radius_ok = R >= min_admissible_radius(kind, m);
    report.radius_note = kRadiusNote;

    NodeSet T = boundary(g, S, R);
    if (T.empty()) {
        report.vacuous = true;
        return report;
    }

    ColorAssignment on_s = restrict_to(sigma, S, "theorem1_check");

    RationalPolynomial p_g = graph_polynomial(g, kind, budget);
    if (p_g.is_zero()) throw UndefinedError("theorem1_check: Z(G(z)) is identically zero");
    RationalPolynomial p_s = graph_polynomial(reduce(g, on_s), kind, budget);
    if (p_s.is_zero())
        throw UndefinedError("theorem1_check: sigma is infeasible (zero polynomial)");
    TaylorApprox tay_g = taylor_truncation(p_g, m);
    TaylorApprox tay_s = taylor_truncation(p_s, m);

    Rat base_c0_ratio = tay_s.constant / tay_g.constant;
    std::vector<Rat> base_diff(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k)
        base_diff[static_cast<std::size_t>(k - 1)] = tay_s.coeff(k) - tay_g.coeff(k);

    const int K = g.color_count();
    Int tau_space = int_pow(static_cast<unsigned long>(K), static_cast<unsigned long>(T.size()));
    const bool full = tau_space <= Int(static_cast<long>(tau_budget));
    if (!full && !seed) throw ConfigError("theorem1_check: seed required for sampled mode");
    report.sampled = !full;
    report.tau_considered = full ? static_cast<std::int64_t>(tau_space.get_si()) : tau_budget;

    Rng rng(seed.value_or(0));
    for (std::int64_t it = 0; it < report.tau_considered; ++it) {
        std::vector<int> colors;
        if (full) {
            colors = colors_from_index(Int(static_cast<long>(it)), T.size(), K);
        } else {
            colors.resize(T.size());
            for (auto& c : colors) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(K)));
        }
        ColorAssignment tau = assignment_on(T, colors);

        DecoratedGraph g_t = reduce(g, tau);
        RationalPolynomial p_t = graph_polynomial(g_t, kind, budget);
        if (p_t.is_zero()) {
            ++report.tau_skipped_infeasible;
            continue;
        }
        DecoratedGraph g_st = reduce(g_t, on_s);
        RationalPolynomial p_st = graph_polynomial(g_st, kind, budget);
        if (p_st.is_zero()) {
            ++report.tau_skipped_infeasible;
            continue;
        }

        TaylorApprox tay_t = taylor_truncation(p_t, m);
        TaylorApprox tay_st = taylor_truncation(p_st, m);

        Rat cond_ratio = tay_st.constant / tay_t.constant;
        if (cond_ratio != base_c0_ratio) {
            report.holds = false;
            report.witness = Theorem1Report::Witness{colors, 0, cond_ratio, base_c0_ratio};
            return report;
        }
        for (int k = 1; k <= m; ++k) {
            Rat lhs = tay_st.coeff(k) - tay_t.coeff(k);
            const Rat& rhs = base_diff[static_cast<std::size_t>(k - 1)];
            if (lhs != rhs) {
                report.holds = false;
                report.witness = Theorem1Report::Witness{colors, k, lhs, rhs};
                return report;
            }
        }
        ++report.tau_checked;
    }
    return report;
}

std::vector<AccuracyRow> interpolation_accuracy(const DecoratedGraph& g, InterpolationKind kind,
                                                int m_max, const Budget& budget,
                                                int precision_bits) {
    if (m_max < 0) throw ConfigError("interpolation_accuracy: m_max must be >= 0");
    Rat z_exact = partition_exact(g, budget);
    if (sgn(z_exact) == 0) throw UndefinedError("Gibbs measure undefined (Z = 0)");
    require_type2_nondegenerate(g, kind);

    TaylorApprox tay = graph_taylor(g, kind, m_max, budget);
    std::vector<AccuracyRow> rows;
    rows.reserve(static_cast<std::size_t>(m_max) + 1);
    Rat exponent(0);
    for (int m = 0; m <= m_max; ++m) {
        if (m >= 1) exponent += tay.coeff(m);  // exponent at z = 1 is a prefix sum
        AccuracyRow row;
        row.m = m;
        row.c0 = tay.constant;
        row.exponent_at_1 = exponent;
        row.approx = render_exp(row.c0, row.exponent_at_1, precision_bits).approx;
        row.relative_error = relative_error_exp(row.c0, row.exponent_at_1, z_exact,
                                                precision_bits);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SsmScanRow> ssm_scan(const DecoratedGraph& g, const NodeSet& S,
                                 const std::vector<int>& radii, InterpolationKind kind, int m,
                                 const Budget& budget, std::int64_t tau_budget,
                                 std::optional<std::uint64_t> seed) {
    require_type2_nondegenerate(g, kind);
    const int K = g.color_count();
    budget.check_colorings(K, static_cast<int>(S.size()), "ssm_scan (sigma space)");
    Int sigma_space = int_pow(static_cast<unsigned long>(K),
                              static_cast<unsigned long>(S.size()));
    const std::int64_t sigma_count = static_cast<std::int64_t>(sigma_space.get_si());

    // Unconditional pseudo-marginals per sigma (shared across radii).
    std::vector<std::optional<PseudoMarginal>> unconditional(
        static_cast<std::size_t>(sigma_count));
    for (std::int64_t si = 0; si < sigma_count; ++si) {
        ColorAssignment sigma =
            assignment_on(S, colors_from_index(Int(static_cast<long>(si)), S.size(), K));
        try {
            unconditional[static_cast<std::size_t>(si)] =
                pseudo_marginal(g, S, sigma, kind, Rat(1), m, budget);
        } catch (const UndefinedError&) {
            // infeasible sigma under Type I; skipped in the gap column
        }
    }

    std::vector<SsmScanRow> rows;
    for (int R : radii) {
        SsmScanRow row;
        row.R = R;
        row.m = m;
        row.radius_ok = R >= min_admissible_radius(kind, m);

        RhoReport rho = rho_R(g, S, R, budget, tau_budget, seed);
        row.rho = rho.rho;
        row.rho_sampled = rho.sampled;

        NodeSet T = boundary(g, S, R);
        row.boundary_empty = T.empty();
        if (T.empty()) {
            rows.push_back(std::move(row));
            continue;
        }

        Int tau_space = int_pow(static_cast<unsigned long>(K),
                                static_cast<unsigned long>(T.size()));
        const bool full = tau_space <= Int(static_cast<long>(tau_budget));
        if (!full && !seed) throw ConfigError("ssm_scan: seed required for sampled mode");
        row.tau_considered = full ? static_cast<std::int64_t>(tau_space.get_si()) : tau_budget;

        Rng rng(seed.value_or(0));
        for (std::int64_t it = 0; it < row.tau_considered; ++it) {
            std::vector<int> colors;
            if (full) {
                colors = colors_from_index(Int(static_cast<long>(it)), T.size(), K);
            } else {
                colors.resize(T.size());
                for (auto& c : colors)
                    c = static_cast<int>(rng.below(static_cast<std::uint64_t>(K)));
            }
            ColorAssignment tau = assignment_on(T, colors);
            for (std::int64_t si = 0; si < sigma_count; ++si) {
                const auto& unc = unconditional[static_cast<std::size_t>(si)];
                if (!unc) continue;
                ColorAssignment sigma = assignment_on(
                    S, colors_from_index(Int(static_cast<long>(si)), S.size(), K));
                PseudoMarginal cond;
                try {
                    cond = conditional_pseudo_marginal(g, S, sigma, T, tau, kind, Rat(1), m,
                                                       budget);
                } catch (const UndefinedError&) {
                    continue;  // infeasible tau under Type I
                }
                if (!(cond == *unc)) {
                    row.pseudo_gap_zero = false;
                    double gap = std::abs(cond.value().approx - unc->value().approx);
                    if (gap > row.pseudo_gap) row.pseudo_gap = gap;
                }
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace zf
