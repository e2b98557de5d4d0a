#include "randsub/rational.hpp"

#include <algorithm>

#include "randsub/errors.hpp"

namespace randsub {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw ValidationError("not a fraction: '" + text + "'");
  }
  if (q.get_den() == 0) throw ValidationError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::size_t bit_size(const Rational& q) {
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

}  // namespace randsub
