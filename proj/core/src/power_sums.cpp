#include "zf/power_sums.hpp"

namespace zf {

namespace {

std::vector<Rat> normalized_coeffs(const RationalPolynomial& p, int m) {
    if (sgn(p.coeff(0)) == 0)
        throw UndefinedError("constant term vanishes; Roots undefined");
    std::vector<Rat> b(static_cast<std::size_t>(m) + 1);
    b[0] = 1;
    for (int k = 1; k <= m; ++k) b[static_cast<std::size_t>(k)] = p.coeff(k) / p.coeff(0);
    return b;
}

}  // namespace

PowerSumTable power_sums_newton(const RationalPolynomial& p, int m) {
    if (m < 0) throw ConfigError("power sums: m must be >= 0");
    std::vector<Rat> b = normalized_coeffs(p, m);
    PowerSumTable table;
    table.m = m;
    table.r.resize(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        Rat acc = Rat(-k) * b[static_cast<std::size_t>(k)];
        for (int i = 1; i < k; ++i)
            acc -= b[static_cast<std::size_t>(i)] * table.r[static_cast<std::size_t>(k - i - 1)];
        table.r[static_cast<std::size_t>(k - 1)] = acc;
    }
    return table;
}

PowerSumTable power_sums_girard(const RationalPolynomial& p, int m) {
    if (m < 0) throw ConfigError("power sums: m must be >= 0");
    std::vector<Rat> b = normalized_coeffs(p, m);
    PowerSumTable table;
    table.m = m;
    table.r.resize(static_cast<std::size_t>(m));

    for (int k = 1; k <= m; ++k) {
        Rat sum(0);
        // Compositions m_1 + 2 m_2 + ... + k m_k = k, enumerated by the largest
        // index first. Each term is
        //   (-1)^(m_1+...+m_k) * (m_1+...+m_k - 1)! / (m_1! ... m_k!) * prod b_i^(m_i).
        std::vector<int> mult(static_cast<std::size_t>(k) + 1, 0);
        auto rec = [&](auto&& self, int i, int remaining) -> void {
            if (i == 0) {
                if (remaining != 0) return;
                long total = 0;
                for (int j = 1; j <= k; ++j) total += mult[static_cast<std::size_t>(j)];
                Int num = factorial(static_cast<unsigned long>(total - 1));
                Int den(1);
                Rat prod(1);
                for (int j = 1; j <= k; ++j) {
                    int mj = mult[static_cast<std::size_t>(j)];
                    if (mj == 0) continue;
                    den *= factorial(static_cast<unsigned long>(mj));
                    prod *= rat_pow(b[static_cast<std::size_t>(j)],
                                    static_cast<unsigned long>(mj));
                }
                Rat term = Rat(num) / Rat(den) * prod;
                if (total % 2 != 0) term = -term;
                sum += term;
                return;
            }
            for (int mi = 0; mi * i <= remaining; ++mi) {
                mult[static_cast<std::size_t>(i)] = mi;
                self(self, i - 1, remaining - mi * i);
            }
            mult[static_cast<std::size_t>(i)] = 0;
        };
        rec(rec, k, k);
        table.r[static_cast<std::size_t>(k - 1)] = Rat(k) * sum;
    }
    return table;
}

Rat TaylorApprox::exponent_at(const Rat& z) const {
    Rat acc(0);
    for (std::size_t i = t.size(); i-- > 0;) {
        acc += t[i];
        acc *= z;
    }
    return acc;
}

TaylorApprox taylor_truncation(const RationalPolynomial& p, int m) {
    PowerSumTable r = power_sums_newton(p, m);
    TaylorApprox out;
    out.m = m;
    out.constant = p.coeff(0);
    out.t.resize(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k)
        out.t[static_cast<std::size_t>(k - 1)] = -r.at(k) / k;
    return out;
}

bool power_sums_additive_check(const DecoratedGraph& g1, const DecoratedGraph& g2,
                               InterpolationKind kind, int m, const Budget& budget) {
    RationalPolynomial p1 = graph_polynomial(g1, kind, budget);
    RationalPolynomial p2 = graph_polynomial(g2, kind, budget);
    RationalPolynomial pu = graph_polynomial(disjoint_union(g1, g2), kind, budget);
    PowerSumTable r1 = power_sums_newton(p1, m);
    PowerSumTable r2 = power_sums_newton(p2, m);
    PowerSumTable ru = power_sums_newton(pu, m);
    for (int k = 1; k <= m; ++k)
        if (ru.at(k) != r1.at(k) + r2.at(k)) return false;
    return true;
}

}  // namespace zf
