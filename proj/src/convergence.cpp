#include "randsub/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "randsub/errors.hpp"
#include "randsub/polynomial.hpp"

namespace randsub {
namespace {

const Rational kHalf(1, 2);

void require_odd_coprime_pair(std::uint32_t k, std::uint32_t l) {
  if (!(k >= 1 && k < l && k % 2 == 1 && l % 2 == 1 && std::gcd(k, l) == 1)) {
    throw ValidationError("need odd coprime 1 <= k < l, got k=" + std::to_string(k) + " l=" + std::to_string(l));
  }
}

Rational alternating(std::uint32_t k, std::uint32_t from, std::uint32_t to) {
  Rational sum = 0;
  for (std::uint32_t i = from; i < to; ++i) {
    const Rational a = single_move_value(i, k);
    if (i % 2 == 0) {
      sum += a;
    } else {
      sum -= a;
    }
  }
  return sum;
}

}  // namespace

std::string verdict_name(const Verdict& v) {
  struct {
    std::string operator()(const Periodic&) const { return "Periodic"; }
    std::string operator()(const ConvergesToHalf&) const { return "ConvergesToHalf"; }
    std::string operator()(const Oscillates&) const { return "Oscillates"; }
    std::string operator()(const ConditionalOscillation&) const { return "ConditionalOscillation"; }
  } visitor;
  return std::visit(visitor, v);
}

LemmaAudit lemma_sums(std::uint32_t k, std::uint32_t l) {
  require_odd_coprime_pair(k, l);
  LemmaAudit audit;
  audit.sum1 = alternating(k, 0, l);
  audit.sum2 = alternating(k, l - k, l);
  const long q = l / k;
  const long kk = k, ll = l;
  if (q % 2 == 0) {
    audit.closed1 = Rational(-q, 2);
    audit.closed2 = ll - kk * (q + 1);
  } else {
    audit.closed1 = Rational(-(q - 1), 2);
    audit.closed2 = kk * q - ll;
  }
  audit.closed1.canonicalize();
  return audit;
}

Rational alpha1_pair_printed(std::uint32_t k, std::uint32_t l) {
  const LemmaAudit audit = lemma_sums(k, l);
  Rational out = (audit.closed1 + audit.closed2 - 1) / static_cast<unsigned long>(k + l);
  out.canonicalize();
  return out;
}

Rational alpha1_pair_sums(std::uint32_t k, std::uint32_t l) {
  const LemmaAudit audit = lemma_sums(k, l);
  Rational out = (audit.sum1 + audit.sum2 - 1) / static_cast<unsigned long>(k + l);
  out.canonicalize();
  return out;
}

Rational alpha1_general(const SubtractionSet& set) {
  if (!set.all_odd()) throw ValidationError("alpha1 needs an all-odd set, got " + set.to_string());
  if (set.gcd() != 1) throw ValidationError("alpha1 needs gcd 1, got " + set.to_string());
  const IntPolynomial q = quotient_closed_form(set);
  const std::vector<Rational> base = base_values(set);
  Rational acc = 0;
  for (std::size_t i = 0; i < base.size(); ++i) acc += Rational(q.coeff(i)) * (base[i] - kHalf);
  acc /= Rational(BigInt(static_cast<unsigned long>(set.sum())));
  acc.canonicalize();
  return acc;
}

EmpiricalAlpha1 alpha1_empirical(const SubtractionSet& set, std::size_t n_max) {
  SequenceStream<double> stream(set);
  const std::size_t start = n_max / 2;
  std::vector<double> window;
  window.reserve(n_max - start + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double a = stream.next();
    if (n >= start) window.push_back(n % 2 == 0 ? a - 0.5 : 0.5 - a);
  }
  const double mean = std::accumulate(window.begin(), window.end(), 0.0) / static_cast<double>(window.size());
  double spread = 0;
  for (double x : window) spread = std::max(spread, std::abs(x - mean));
  return {mean, spread};
}

Alpha1Result alpha1_routes(const SubtractionSet& set, std::size_t empirical_n_max, double tolerance) {
  Alpha1Result r;
  r.via_quotient = alpha1_general(set);
  if (set.size() == 2) {
    const auto k = set.elements()[0], l = set.elements()[1];
    r.via_sums = alpha1_pair_sums(k, l);
    r.via_printed_formula = alpha1_pair_printed(k, l);
    r.sums_match_quotient = *r.via_sums == r.via_quotient;
    r.printed_matches_sums = *r.via_printed_formula == *r.via_sums;
  }
  r.empirical = alpha1_empirical(set, empirical_n_max);
  r.empirical_within_spread =
      std::abs(r.empirical.estimate - r.via_quotient.get_d()) <= r.empirical.spread + tolerance;
  return r;
}

Classification classify(const SubtractionSet& set) {
  GcdReduction red = gcd_reduce(set);
  const SubtractionSet& s = red.set;
  auto make = [&](Verdict v) { return Classification{std::move(v), s, red.factor}; };

  if (s.size() == 1) return make(Periodic{2ull * set.max()});
  if (!s.all_odd()) {
    return make(ConvergesToHalf{s.size() == 2 ? "elements of mixed parity; no root of chi_S on the unit circle"
                                              : "even element present; no root of chi_S on the unit circle"});
  }
  if (s.size() == 2) {
    Rational alpha1 = alpha1_pair_sums(s.elements()[0], s.elements()[1]);
    Rational even = kHalf + alpha1, odd = kHalf - alpha1;
    return make(Oscillates{alpha1, even, odd});
  }
  return make(ConditionalOscillation{alpha1_general(s), square_free_test(characteristic_poly(s))});
}

SubsequenceLimits subsequence_limits(const SubtractionSet& set) {
  const SubtractionSet s = gcd_reduce(set).set;
  if (!s.all_odd()) return {kHalf, kHalf, true};
  const Rational alpha1 = alpha1_general(s);
  return {kHalf + alpha1, kHalf - alpha1, false};
}

}  // namespace randsub
