#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "randsub/rational.hpp"
#include "randsub/roots.hpp"
#include "randsub/subtraction_set.hpp"

namespace randsub {

// Range scans over subtraction sets.
//
// Every scan has an OpenMP kernel and a plain serial loop kept as the
// reference; both fill a result vector indexed by enumeration position, so
// the output is identical regardless of backend or thread count.

enum class Backend { serial, openmp };

enum class SetFilter {
  coprime,          // gcd(S) = 1
  all_odd_coprime,  // gcd(S) = 1 and every element odd
};

// Sets with 1 <= |S| <= t_max and max(S) <= k_max passing `filter`, ordered
// by (|S|, max(S), elements). Throws ValidationError if a bound is zero.
std::vector<SubtractionSet> enumerate_sets(unsigned t_max, unsigned k_max, SetFilter filter);

struct ConjectureRecord {
  SubtractionSet set;
  bool square_free;
};

struct ConjectureReport {
  std::vector<ConjectureRecord> records;
  std::size_t verified = 0;
  std::vector<SubtractionSet> failures;
};

// Exact square-free test of chi_S for every all-odd, gcd-1 set in range.
ConjectureReport scan_conjecture(unsigned t_max, unsigned k_max, Backend backend = Backend::openmp);

struct QuestionRecord {
  SubtractionSet set;
  Rational alpha1;
  bool zero() const { return alpha1 == 0; }
};

struct QuestionReport {
  std::vector<QuestionRecord> records;
  std::size_t zero_count = 0;
  std::size_t negative_count = 0;
  std::optional<Rational> min_abs_alpha1;
  std::optional<Rational> max_alpha1;
};

// Exact alpha1 for every all-odd, gcd-1 set in range.
QuestionReport scan_question(unsigned t_max, unsigned k_max, Backend backend = Backend::openmp);

struct RootRecord {
  SubtractionSet set;
  bool all_odd;
  bool minus_one_is_root;  // exact
  double max_modulus;
  double spectral_gap;
};

struct RootReport {
  std::vector<RootRecord> records;
  std::size_t parity_law_violations = 0;  // minus_one_is_root != all_odd
  std::size_t bound_violations = 0;       // max_modulus > 1 + bound_eps
  double max_modulus_seen = 0;
};

// Numerical roots plus exact evaluation at -1 for every gcd-1 set in range.
RootReport scan_roots(unsigned t_max, unsigned k_max, Backend backend = Backend::openmp, double bound_eps = 1e-8,
                      const RootSolverOptions& options = {});

// Threads used by the OpenMP backend; 0 keeps the runtime default.
void set_scan_threads(int threads);

}  // namespace randsub
