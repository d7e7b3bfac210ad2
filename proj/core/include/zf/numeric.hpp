#pragma once

#include <complex>
#include <string>
#include <vector>

#include "zf/rational.hpp"

namespace zf {

/// Numeric rendering of c0 * exp(exponent) at a chosen working precision.
/// The exact pipeline never takes logs or exps; this layer is the only place
/// floating point appears, and every rendering carries its precision.
struct NumericRendering {
    std::string decimal;
    double approx = 0.0;
    int precision_bits = 0;
};

NumericRendering render_exp(const Rat& c0, const Rat& exponent, int precision_bits = 128);

/// |c0 * exp(exponent) - exact| / |exact|, evaluated in extended precision.
double relative_error_exp(const Rat& c0, const Rat& exponent, const Rat& exact,
                          int precision_bits = 128);

/// Numeric-layer evaluation of c0 * exp(sum_k t_k z^k) at complex z.
std::complex<double> exp_taylor_complex(const Rat& c0, const std::vector<Rat>& t,
                                        std::complex<double> z);

}  // namespace zf
