#pragma once

#include <gmpxx.h>

#include <string>

namespace fm {

// GMP keeps mpq_class canonical as long as every construction path from
// raw parts goes through canonicalize(); parse_rational does.
using Rational = mpq_class;
using Integer = mpz_class;

/// "n/d", or "n" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "n", "n/d" and finite decimals such as "-0.05" (converted exactly).
Rational parse_rational(const std::string& text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Integer factorial(unsigned n);
Integer binomial(long n, long k);
/// (a+b+c)!/(a!b!c!), zero when any part is negative.
Integer trinomial(long a, long b, long c);

}  // namespace fm
