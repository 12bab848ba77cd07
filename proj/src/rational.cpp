#include "nilbniz/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nilbniz {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  if (allow_sign && (s[0] == '+' || s[0] == '-')) pos = 1;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos)
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text, true))
      throw std::invalid_argument("bad rational literal: '" + text + "'");
    return Rational(text);
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num, true) || !is_integer_token(den, false))
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  Integer d(den);
  if (sgn(d) == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str();  // mpq prints "p" or "p/q" in canonical form
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (is_zero(base)) throw std::domain_error("0 raised to a negative power");
    return 1 / pow_rational(base, -exp);
  }
  Rational acc(1);
  Rational b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Rational inv_pow2(unsigned long n) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
  Rational q(Integer(1), den);
  q.canonicalize();
  return q;
}

}  // namespace nilbniz
