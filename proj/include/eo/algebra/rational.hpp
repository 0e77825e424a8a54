#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eo::algebra {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Rational power(const Rational& base, int exponent);

}  // namespace eo::algebra
