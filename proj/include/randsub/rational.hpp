#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace randsub {

using BigInt = mpz_class;
using Rational = mpq_class;

// Canonical "num/den" text, always with an explicit denominator ("0/1", "5/8").
std::string to_fraction_string(const Rational& q);

// Parses "num/den" or a bare integer. Throws ValidationError on bad input.
Rational parse_fraction(const std::string& text);

// Bits needed for the larger of |numerator| and denominator.
std::size_t bit_size(const Rational& q);

inline Rational make_rational(long num, unsigned long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace randsub
