#pragma once

#include <vector>

#include "zf/rational.hpp"

namespace zf {

/// Univariate polynomial with exact rational coefficients. Trailing zero
/// coefficients are trimmed; the constant term is always present (the zero
/// polynomial is stored as the single coefficient 0).
class RationalPolynomial {
public:
    RationalPolynomial() : c_{Rat(0)} {}
    explicit RationalPolynomial(std::vector<Rat> coeffs);

    static RationalPolynomial constant(Rat c) { return RationalPolynomial({std::move(c)}); }

    /// Degree of the highest nonzero coefficient; -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }

    const Rat& coeff(int k) const;             // 0 beyond the stored degree
    const std::vector<Rat>& coeffs() const { return c_; }

    /// Horner evaluation, exact.
    Rat evaluate(const Rat& z) const;

    RationalPolynomial operator*(const RationalPolynomial& other) const;
    RationalPolynomial operator*(const Rat& s) const;

    bool operator==(const RationalPolynomial&) const = default;

    /// Exact Lagrange interpolation through distinct sample points.
    static RationalPolynomial lagrange_interpolate(
        const std::vector<std::pair<Rat, Rat>>& points);

private:
    std::vector<Rat> c_;
    static const Rat zero_;
};

}  // namespace zf
