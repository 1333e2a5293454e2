#pragma once

#include <gmpxx.h>

#include <string>

#include "painleq/error.hpp"

namespace painleq {

// Exact rational number. mpq_class keeps denominator > 0 and gcd(num,den)=1
// as long as values are built through canonicalizing entry points, which is
// what the helpers below guarantee.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_string(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return out;  // base canonical => base^e canonical
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace painleq
