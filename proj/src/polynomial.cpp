#include "randsub/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "randsub/errors.hpp"

namespace randsub {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

std::string IntPolynomial::to_text() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].get_str();
  }
  return out;
}

IntPolynomial IntPolynomial::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<BigInt> coeffs;
  std::string token;
  while (in >> token) {
    BigInt c;
    if (c.set_str(token, 10) != 0) throw ValidationError("bad polynomial coefficient '" + token + "'");
    coeffs.push_back(c);
  }
  if (coeffs.empty()) throw ValidationError("empty polynomial text");
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial characteristic_poly(const SubtractionSet& set) {
  std::vector<BigInt> coeffs(set.max() + 1);
  for (auto d : set.d_values()) coeffs[d] = 1;
  coeffs[0] = 1;
  coeffs[set.max()] = static_cast<unsigned long>(set.size());
  return IntPolynomial(std::move(coeffs));
}

BigInt eval_integer(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> out(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt content = 0;
  for (const auto& c : p.coeffs()) content = gcd(content, c);
  if (p.leading() < 0) content = -content;
  std::vector<BigInt> out = p.coeffs();
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return IntPolynomial(std::move(out));
}

namespace {

// A nonzero multiple of the pseudo-remainder of a by b (deg b >= 0).
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
    const BigInt la = a.leading();
    std::vector<BigInt> next = a.coeffs();
    for (auto& c : next) c *= lb;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) next[j + shift] -= la * b.coeffs()[j];
    a = primitive_part(IntPolynomial(std::move(next)));
  }
  return a;
}

}  // namespace

IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial u = primitive_part(a);
  IntPolynomial v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  return primitive_part(u);
}

bool square_free_test(const IntPolynomial& p) {
  if (p.degree() < 1) throw ValidationError("square-free test needs degree >= 1");
  return polynomial_gcd(p, derivative(p)).degree() == 0;
}

DivisionByLinear divide_by_x_plus_one(const IntPolynomial& p) {
  if (p.degree() < 1) return {IntPolynomial{}, p.coeff(0)};
  const auto& c = p.coeffs();
  const std::size_t d = c.size() - 1;
  std::vector<BigInt> q(d);
  BigInt carry = 0;
  for (std::size_t i = d; i-- > 0;) {
    carry = c[i + 1] - carry;
    q[i] = carry;
  }
  return {IntPolynomial(std::move(q)), c[0] - carry};
}

IntPolynomial quotient_closed_form(const SubtractionSet& set) {
  if (!set.all_odd()) throw ValidationError("quotient formula needs an all-odd set, got " + set.to_string());
  std::vector<std::uint32_t> support = set.d_values();
  support.push_back(0);
  std::sort(support.begin(), support.end());

  std::vector<BigInt> q(set.max());
  for (std::size_t m = 0; m + 1 < support.size(); ++m) {
    for (std::size_t i = support[m]; i < support[m + 1]; ++i) {
      q[i] = static_cast<unsigned long>(m + 1);
      if (i % 2 == 1) q[i] = -q[i];
    }
  }
  IntPolynomial quotient(std::move(q));
  if (IntPolynomial{1, 1} * quotient != characteristic_poly(set)) {
    throw std::logic_error("(x+1) * quotient != characteristic polynomial for " + set.to_string());
  }
  return quotient;
}

}  // namespace randsub
