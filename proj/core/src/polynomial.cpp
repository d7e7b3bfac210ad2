#include "zf/polynomial.hpp"

#include "zf/errors.hpp"

namespace zf {

const Rat RationalPolynomial::zero_ = Rat(0);

RationalPolynomial::RationalPolynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    while (c_.size() > 1 && sgn(c_.back()) == 0) c_.pop_back();
    if (c_.empty()) c_.push_back(Rat(0));
}

int RationalPolynomial::degree() const {
    if (c_.size() == 1 && sgn(c_[0]) == 0) return -1;
    return static_cast<int>(c_.size()) - 1;
}

const Rat& RationalPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero_;
    return c_[static_cast<std::size_t>(k)];
}

Rat RationalPolynomial::evaluate(const Rat& z) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= z;
        acc += c_[i];
    }
    return acc;
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& other) const {
    if (is_zero() || other.is_zero()) return RationalPolynomial();
    std::vector<Rat> out(c_.size() + other.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < other.c_.size(); ++j) out[i + j] += c_[i] * other.c_[j];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const Rat& s) const {
    std::vector<Rat> out = c_;
    for (Rat& v : out) v *= s;
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::lagrange_interpolate(
    const std::vector<std::pair<Rat, Rat>>& points) {
    if (points.empty()) throw ConfigError("lagrange_interpolate: no points");
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw ConfigError("lagrange_interpolate: duplicate sample point");

    std::vector<Rat> acc(n, Rat(0));
    std::vector<Rat> basis;
    for (std::size_t i = 0; i < n; ++i) {
        // basis_i(z) = prod_{j != i} (z - x_j) / (x_i - x_j)
        basis.assign(1, Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis.push_back(Rat(0));
            for (std::size_t t = basis.size(); t-- > 1;) {
                basis[t] = basis[t - 1] - points[j].first * basis[t];
            }
            basis[0] *= -points[j].first;
            denom *= points[i].first - points[j].first;
        }
        Rat scale = points[i].second / denom;
        for (std::size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * scale;
    }
    return RationalPolynomial(std::move(acc));
}

}  // namespace zf
