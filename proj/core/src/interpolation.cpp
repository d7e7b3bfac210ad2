#include "zf/interpolation.hpp"

#include <algorithm>

#include "zf/enumerate.hpp"
#include "zf/parallel.hpp"
#include "zf/patterns.hpp"
#include "zf/power_sums.hpp"

namespace zf {

namespace {

bool matches_masked_hardcore(const EdgeMatrix& m, int pin_lo, int pin_hi) {
    // Base hard-core matrix [[1,1],[1,0]] with rows/columns masked by pins.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Rat expected = (i == 1 && j == 1) ? Rat(0) : Rat(1);
            if (pin_lo >= 0 && i != pin_lo) expected = 0;
            if (pin_hi >= 0 && j != pin_hi) expected = 0;
            if (m.at(i, j) != expected) return false;
        }
    return true;
}

GraphStructure structure_of(const DecoratedGraph& g) {
    return GraphStructure{g.node_count(), g.edges()};
}

}  // namespace

std::optional<Rat> hardcore_shape(const DecoratedGraph& g) {
    if (g.color_count() != 2) return std::nullopt;
    Rat lambda(0);
    if (g.node_count() > 0) {
        if (g.node_weight(0, 0) != 1) return std::nullopt;
        lambda = g.node_weight(0, 1);
        for (int u = 0; u < g.node_count(); ++u) {
            if (g.node_weight(u, 0) != 1 || g.node_weight(u, 1) != lambda) return std::nullopt;
        }
    }
    const auto& pinned = g.pinned();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        int pin_u = pinned.assigned(u) ? pinned.color_of(u) : -1;
        int pin_v = pinned.assigned(v) ? pinned.color_of(v) : -1;
        if (!matches_masked_hardcore(g.edge_matrix(e), pin_u, pin_v)) return std::nullopt;
    }
    return lambda;
}

std::vector<Int> independent_set_counts(const GraphStructure& gs, int size_max,
                                        const Budget& budget) {
    if (gs.n > 62) throw BudgetError("independent_set_counts: too many nodes");
    budget.check_colorings(2, gs.n, "independent_set_counts");
    const int cap = size_max < 0 ? gs.n : std::min(size_max, gs.n);

    std::vector<std::uint64_t> adj(gs.n, 0);
    for (auto [u, v] : gs.edges) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    std::vector<Int> counts(static_cast<std::size_t>(cap) + 1, Int(0));
    counts[0] = 1;

    // Visits exactly the independent sets, extending by nodes above `start`.
    auto rec = [&](auto&& self, int start, std::uint64_t forbidden, int size) -> void {
        if (size == cap) return;
        for (int j = start; j < gs.n; ++j) {
            if (forbidden & (std::uint64_t{1} << j)) continue;
            counts[static_cast<std::size_t>(size) + 1] += 1;
            self(self, j + 1, forbidden | adj[j] | (std::uint64_t{1} << j), size + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return counts;
}

RationalPolynomial type1_polynomial(const DecoratedGraph& g, const Budget& budget) {
    auto lambda = hardcore_shape(g);
    if (!lambda) throw ConfigError("type1_polynomial: non-hard-core decoration");

    HardcoreReduction hr = hardcore_reduce_structure(structure_of(g), g.pinned());
    if (!hr.feasible) return RationalPolynomial();  // Z identically zero

    std::vector<Int> counts = independent_set_counts(hr.structure, -1, budget);
    Rat pin_factor = rat_pow(*lambda, static_cast<unsigned long>(hr.occupied_pins));
    if (hr.occupied_pins > 0 && sgn(pin_factor) == 0) return RationalPolynomial();

    std::vector<Rat> coeffs(counts.size());
    Rat power = pin_factor;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        coeffs[k] = Rat(counts[k]) * power;
        power *= *lambda;
    }
    return RationalPolynomial(std::move(coeffs));
}

Rat l_constant(const DecoratedGraph& g) {
    Rat l(1);
    for (int u = 0; u < g.node_count(); ++u) {
        Rat s(0);
        for (int c = 0; c < g.color_count(); ++c) s += g.node_weight(u, c);
        l *= s;
    }
    return l;
}

RationalPolynomial type2_polynomial(const DecoratedGraph& g, const Budget& budget) {
    const int m_edges = g.edge_count();
    std::vector<int> fixed(g.node_count(), -1);
    detail::check_enumeration_budget(g, fixed, budget, "type2_polynomial");

    // Sample at z = 0..|E| and interpolate. The point evaluations are
    // independent partition-function calls and run in parallel once the
    // state space is large enough to amortize the workers.
    std::vector<std::pair<Rat, Rat>> points(static_cast<std::size_t>(m_edges) + 1);
    points[0] = {Rat(0), l_constant(g)};  // the family trivializes at z = 0

    Int states = int_pow(static_cast<unsigned long>(g.color_count()),
                         static_cast<unsigned long>(g.node_count()));
    const int workers = states > 20000 ? thread_count() : 1;
    detail::parallel_for(m_edges, workers, [&](int idx) {
        const int t = idx + 1;
        Rat z(t);
        std::vector<EdgeMatrix> subst(static_cast<std::size_t>(m_edges),
                                      EdgeMatrix(g.color_count(), Rat(0)));
        for (int e = 0; e < m_edges; ++e) {
            const EdgeMatrix& a = g.edge_matrix(e);
            for (int i = 0; i < g.color_count(); ++i)
                for (int j = 0; j < g.color_count(); ++j)
                    subst[e].at(i, j) = Rat(1) + z * (a.at(i, j) - 1);
        }
        Rat total(0);
        detail::enumerate_weighted(
            g, fixed, [&](int u, int c) -> const Rat& { return g.node_weight(u, c); },
            [&](int e, int clo, int chi) -> const Rat& { return subst[e].at(clo, chi); },
            [&](const std::vector<int>&, const Rat& w) { total += w; });
        points[static_cast<std::size_t>(t)] = {std::move(z), std::move(total)};
    });
    return RationalPolynomial::lagrange_interpolate(points);
}

RationalPolynomial type2_polynomial_subset_oracle(const DecoratedGraph& g, const Budget& budget) {
    const int m_edges = g.edge_count();
    if (m_edges > 20) throw BudgetError("type2_polynomial_subset_oracle: too many edges");
    std::vector<int> fixed(g.node_count(), -1);
    detail::check_enumeration_budget(g, fixed, budget, "type2_polynomial_subset_oracle");

    std::vector<Rat> coeffs(static_cast<std::size_t>(m_edges) + 1, Rat(0));
    const Rat one(1);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m_edges); ++mask) {
        std::vector<EdgeMatrix> w(static_cast<std::size_t>(m_edges),
                                  EdgeMatrix(g.color_count(), Rat(0)));
        for (int e = 0; e < m_edges; ++e) {
            const EdgeMatrix& a = g.edge_matrix(e);
            for (int i = 0; i < g.color_count(); ++i)
                for (int j = 0; j < g.color_count(); ++j)
                    w[e].at(i, j) = (mask >> e) & 1 ? a.at(i, j) - 1 : one;
        }
        Rat total(0);
        detail::enumerate_weighted(
            g, fixed, [&](int u, int c) -> const Rat& { return g.node_weight(u, c); },
            [&](int e, int clo, int chi) -> const Rat& { return w[e].at(clo, chi); },
            [&](const std::vector<int>&, const Rat& wt) { total += wt; });
        coeffs[static_cast<std::size_t>(__builtin_popcount(mask))] += total;
    }
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial graph_polynomial(const DecoratedGraph& g, InterpolationKind kind,
                                    const Budget& budget) {
    return kind == InterpolationKind::TypeI ? type1_polynomial(g, budget)
                                            : type2_polynomial(g, budget);
}

std::vector<Int> i_k_counts(const GraphStructure& gs, int k_max, const Budget& budget) {
    if (k_max < 0) throw ConfigError("i_k_counts: k_max must be >= 0");
    std::vector<Int> counts = independent_set_counts(gs, k_max, budget);
    counts.resize(static_cast<std::size_t>(k_max) + 1, Int(0));

    // Cross-check against the connected-subgraph route where it is available.
    const int k_fast = std::min(k_max, 4);
    if (k_fast >= 1) {
        std::vector<Rat> r = hardcore_power_sums_via_connected(gs, k_fast, budget);
        // Invert Newton's identity: k c_k = -sum_{i<k} c_i r_{k-i}, c_0 = 1.
        std::vector<Rat> c(static_cast<std::size_t>(k_fast) + 1, Rat(0));
        c[0] = 1;
        for (int k = 1; k <= k_fast; ++k) {
            Rat acc(0);
            for (int i = 0; i < k; ++i) acc += c[i] * r[static_cast<std::size_t>(k - i - 1)];
            c[k] = -acc / k;
        }
        for (int k = 0; k <= k_fast; ++k) {
            if (Rat(counts[static_cast<std::size_t>(k)]) != c[static_cast<std::size_t>(k)])
                throw Error("i_k_counts: enumeration and connected-subgraph routes disagree");
        }
    }
    return counts;
}

}  // namespace zf
