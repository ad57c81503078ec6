#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cktweb {

using Integer = mpz_class;
// Arithmetic keeps mpq values canonical; the two-argument constructor does not, so use ratio().
using Rational = mpq_class;

// Accepts "p" or "p/q" with optional sign. No decimals, no exponents.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline double to_double(const Rational& q) { return q.get_d(); }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// n/d in lowest terms. DomainError when d == 0.
Rational ratio(const Integer& n, const Integer& d);
Rational pow(const Rational& base, int exponent);
// Fraction with the smallest denominator in [a, b], a <= b.
Rational simplest_between(const Rational& a, const Rational& b);

}  // namespace cktweb
