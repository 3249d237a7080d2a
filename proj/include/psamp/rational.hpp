#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace psamp {

// Exact arbitrary-precision fraction, the number type behind every
// probability in the library. mpq_class keeps values in lowest terms with a
// positive denominator once canonicalized; the helpers below never skip
// canonicalization (GMP does not canonicalize on construction from num/den).
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den);
Rational make_rational(const BigInt& num, const BigInt& den);

// Parses "n" or "n/d" in base 10. Throws DomainError on malformed input or a
// zero denominator.
Rational parse_rational(const std::string& text);

// "n/d", or just "n" when the denominator is 1.
std::string to_string(const Rational& q);

// Combined bit length of numerator and denominator; used by power budgets.
std::size_t bit_size(const Rational& q);

inline bool is_integer(const Rational& q) {
  return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

}  // namespace psamp
