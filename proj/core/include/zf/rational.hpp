#pragma once

#include <gmpxx.h>

#include <string>

#include "zf/errors.hpp"

namespace zf {

/// Exact rational scalar. All decorations, partition functions and Taylor
/// coefficients are carried as Rat; floating point enters only in the final
/// numeric rendering layer.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p/q" or "p" (decimal integers, optional sign). Throws ConfigError
/// on malformed input or zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ConfigError("empty rational literal");
    for (char ch : s) {
        if (!(ch == '/' || ch == '-' || ch == '+' || (ch >= '0' && ch <= '9')))
            throw ConfigError("malformed rational literal: " + s);
    }
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        throw ConfigError("malformed rational literal: " + s);
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw ConfigError("zero denominator in rational literal: " + s);
    }
    mpq_canonicalize(q);
    Rat r(q);
    mpq_clear(q);
    return r;
}

/// Canonical "p/q" rendering; the denominator is always written ("4/1").
inline std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// mpq_class(num, den) does not reduce; this does. Prefer it whenever the
/// operands are not known to be coprime.
inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw ConfigError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

inline Int int_pow(unsigned long base, unsigned long e) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

inline Int factorial(unsigned long k) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

}  // namespace zf
