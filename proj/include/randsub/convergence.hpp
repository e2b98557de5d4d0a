#pragma once

#include <optional>
#include <string>
#include <variant>

#include "randsub/rational.hpp"
#include "randsub/sequence.hpp"
#include "randsub/subtraction_set.hpp"

namespace randsub {

// Long-run behaviour of a_n^S.
//
// After dividing S by its gcd:
//   - one element: the 0/1 block pattern, periodic;
//   - some element even: all roots of chi_S lie strictly inside the unit
//     circle, so a_n -> 1/2;
//   - two odd elements: -1 is a simple root and the only one on the unit
//     circle; even and odd terms tend to 1/2 + alpha1 and 1/2 - alpha1 with
//     alpha1 < 0;
//   - three or more odd elements: the same picture holds provided the roots of
//     chi_S are simple, which is checked exactly per instance.

struct Periodic {
  std::uint64_t period;  // 2k for S = {k}
};

struct ConvergesToHalf {
  std::string reason;
};

struct Oscillates {
  Rational alpha1;
  Rational even_limit;  // 1/2 + alpha1
  Rational odd_limit;   // 1/2 - alpha1
};

struct ConditionalOscillation {
  Rational alpha1;
  bool simple_roots_verified;
};

using Verdict = std::variant<Periodic, ConvergesToHalf, Oscillates, ConditionalOscillation>;

std::string verdict_name(const Verdict& v);

struct Classification {
  Verdict verdict;
  SubtractionSet reduced;       // S / gcd(S); the verdict is about this set
  std::uint32_t reduction_factor;
};

Classification classify(const SubtractionSet& set);

// Alternating sums over the single-move values a_j = a_j^{{k}}, together with
// the closed forms claimed for them:
//   sum1 = sum_{i=0}^{l-1} (-1)^i a_i
//   sum2 = sum_{i=l-k}^{l-1} (-1)^i a_i
// With q = floor(l/k), the claimed closed forms are
//   closed1 = -q/2 (q even), -(q-1)/2 (q odd)
//   closed2 = l - k(q+1) (q even), kq - l (q odd).
// closed2 counts the nonzero terms rather than summing them and is wrong in
// general (k=3, l=5 gives 0 vs -2); mismatches are reported, not hidden.
struct LemmaAudit {
  Rational sum1, sum2, closed1, closed2;
  bool first_agrees() const { return sum1 == closed1; }
  bool second_agrees() const { return sum2 == closed2; }
};

// All pair routes require odd, coprime k < l; ValidationError otherwise.
LemmaAudit lemma_sums(std::uint32_t k, std::uint32_t l);

// (closed1 + closed2 - 1) / (l + k): the two-branch closed form built on the
// claimed sums. Kept for auditing only.
Rational alpha1_pair_printed(std::uint32_t k, std::uint32_t l);

// (sum1 + sum2 - 1) / (l + k) from direct summation. Authoritative.
Rational alpha1_pair_sums(std::uint32_t k, std::uint32_t l);

// alpha1 = (1 / sum k_i) * sum_{i < k_max} Q_i (a_i - 1/2), where Q is the
// quotient chi_S / (x + 1) and a_i the base values. This is the first row of
// the inverse Vandermonde matrix applied to the base window, valid when the
// roots of chi_S are simple. Requires S all-odd with gcd 1.
Rational alpha1_general(const SubtractionSet& set);

struct EmpiricalAlpha1 {
  double estimate;  // mean of (-1)^n (a_n - 1/2) over n in [n_max/2, n_max]
  double spread;    // max |term - estimate| over the same window
};

// Float-mode streaming estimate; about 0 for sets that converge to 1/2.
EmpiricalAlpha1 alpha1_empirical(const SubtractionSet& set, std::size_t n_max);

struct Alpha1Result {
  std::optional<Rational> via_printed_formula;  // two-element sets only
  std::optional<Rational> via_sums;             // two-element sets only
  Rational via_quotient;
  EmpiricalAlpha1 empirical{};
  bool sums_match_quotient = true;
  bool printed_matches_sums = true;
  bool empirical_within_spread = true;  // |empirical - exact| <= spread + tolerance
};

// Every route for an all-odd, gcd-1 set.
Alpha1Result alpha1_routes(const SubtractionSet& set, std::size_t empirical_n_max, double tolerance = 1e-6);

struct SubsequenceLimits {
  Rational even;
  Rational odd;
  bool convergent;  // both limits are 1/2 because the sequence converges
};

// (1/2 + alpha1, 1/2 - alpha1) for the gcd-reduced set, or (1/2, 1/2) with
// convergent = true when the reduced set has an even element.
SubsequenceLimits subsequence_limits(const SubtractionSet& set);

}  // namespace randsub
