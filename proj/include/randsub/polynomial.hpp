#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "randsub/rational.hpp"
#include "randsub/subtraction_set.hpp"

namespace randsub {

// Polynomial with arbitrary-precision integer coefficients, ascending order.
// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  // Coefficient of x^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  // Space-separated ascending coefficients, "0" for the zero polynomial.
  std::string to_text() const;
  static IntPolynomial from_text(std::string_view text);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// t x^{k_max} + sum_{i<t} x^{k_max - k_i} + 1.
IntPolynomial characteristic_poly(const SubtractionSet& set);

BigInt eval_integer(const IntPolynomial& p, const BigInt& x);

IntPolynomial derivative(const IntPolynomial& p);

// Content-free part with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

// gcd over the rationals, returned as a primitive integer polynomial.
// Computed with a primitive pseudo-remainder sequence.
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);

// True iff gcd(p, p') is constant, i.e. every complex root is simple.
// Requires degree >= 1.
bool square_free_test(const IntPolynomial& p);

struct DivisionByLinear {
  IntPolynomial quotient;
  BigInt remainder;  // equals p(-1)
};

// p = (x + 1) q + r, by synthetic division.
DivisionByLinear divide_by_x_plus_one(const IntPolynomial& p);

// chi_S / (x + 1) written down from the support of chi_S, for all-odd S.
// With the support 0 = s_0 < s_1 < ... < s_t = k_max in ascending order, the
// coefficient of x^i is (m + 1)(-1)^i for s_m <= i < s_{m+1}. The identity
// (x + 1) Q = chi_S is verified before returning; a mismatch throws
// std::logic_error. Throws ValidationError if S has an even element.
IntPolynomial quotient_closed_form(const SubtractionSet& set);

}  // namespace randsub
