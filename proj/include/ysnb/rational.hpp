#pragma once

#include <gmpxx.h>

#include <string>

namespace ysnb {

// Exact arithmetic everywhere: coefficients are reduced fractions with
// positive denominator (mpq canonical form), denominators are bignums.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer numerator(const Rational& q) { return Integer(q.get_num()); }
inline Integer denominator(const Rational& q) { return Integer(q.get_den()); }

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// lcm of the integer range [a, b]; 1 on an empty range.
inline Integer lcm_range(long a, long b) {
    Integer r(1);
    for (long x = a; x <= b; ++x) r = lcm(r, Integer(x));
    return r;
}

inline bool divides(const Integer& a, const Integer& b) {
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace ysnb
