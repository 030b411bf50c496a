#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hlpp {

// Arbitrary-precision scalars. Rational values are kept canonical
// (denominator > 0, gcd(num, den) = 1); GMP maintains this for all
// arithmetic results, construction from raw num/den goes through
// make_rational below.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_decimal(const Integer& v) { return v.get_str(); }

inline std::string to_decimal(const Rational& v) {
    std::string s = v.get_num().get_str();
    if (v.get_den() != 1) s += "/" + v.get_den().get_str();
    return s;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace hlpp
