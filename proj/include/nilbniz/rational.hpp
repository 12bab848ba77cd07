#ifndef NILBNIZ_RATIONAL_HPP
#define NILBNIZ_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nilbniz {

// Exact arbitrary-precision rational. GMP keeps values canonical (lowest
// terms, positive denominator) as long as every entry point canonicalizes,
// which parse_rational() and the helpers below do.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (q > 0). Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);

/// n! as an exact integer.
Integer factorial(unsigned long n);

/// base^exp for integer exp (exp >= 0, or exp < 0 with base != 0).
Rational pow_rational(const Rational& base, long exp);

/// 2^-n for n >= 0.
Rational inv_pow2(unsigned long n);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace nilbniz

#endif
