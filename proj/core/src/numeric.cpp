#include "zf/numeric.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "zf/errors.hpp"

namespace zf {

NumericRendering render_exp(const Rat& c0, const Rat& exponent, int precision_bits) {
    if (precision_bits < 16 || precision_bits > 1 << 20)
        throw ConfigError("render_exp: unreasonable precision");
    NumericRendering out;
    out.precision_bits = precision_bits;

    mpfr_t x;
    mpfr_init2(x, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_q(x, exponent.get_mpq_t(), MPFR_RNDN);
    mpfr_exp(x, x, MPFR_RNDN);
    mpfr_mul_q(x, x, c0.get_mpq_t(), MPFR_RNDN);
    out.approx = mpfr_get_d(x, MPFR_RNDN);

    int digits = static_cast<int>(precision_bits * 0.30103) - 2;
    if (digits < 6) digits = 6;
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, x);
    out.decimal = buf.data();
    mpfr_clear(x);
    return out;
}

double relative_error_exp(const Rat& c0, const Rat& exponent, const Rat& exact,
                          int precision_bits) {
    if (sgn(exact) == 0) throw UndefinedError("relative_error_exp: exact value is zero");
    mpfr_t x, e;
    mpfr_init2(x, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_init2(e, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_q(x, exponent.get_mpq_t(), MPFR_RNDN);
    mpfr_exp(x, x, MPFR_RNDN);
    mpfr_mul_q(x, x, c0.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(e, exact.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(x, x, e, MPFR_RNDN);
    mpfr_div(x, x, e, MPFR_RNDN);
    mpfr_abs(x, x, MPFR_RNDN);
    double out = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    mpfr_clear(e);
    return out;
}

std::complex<double> exp_taylor_complex(const Rat& c0, const std::vector<Rat>& t,
                                        std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    std::complex<double> zp(1.0, 0.0);
    for (const Rat& tk : t) {
        zp *= z;
        acc += tk.get_d() * zp;
    }
    return c0.get_d() * std::exp(acc);
}

}  // namespace zf
