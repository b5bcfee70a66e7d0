#ifndef FOURSQ_RATIONAL_HPP
#define FOURSQ_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace foursq {

using Rational = mpq_class;
using BigInt = mpz_class;

/* mpq_class(num, den) does not canonicalize on its own. */
inline Rational make_rational(long long num, long long den = 1) {
    Rational q(BigInt(num), BigInt(den));
    q.canonicalize();
    return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/* q^e for integer e (negative allowed, q != 0). */
inline Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? q : Rational(1) / q;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

/* Canonical "num/den" string, "num" when the denominator is 1. */
inline std::string rational_str(const Rational& q) {
    return q.get_str();
}

inline double rational_double(const Rational& q) {
    return q.get_d();
}

}

#endif
