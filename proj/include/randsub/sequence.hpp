#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "randsub/rational.hpp"
#include "randsub/subtraction_set.hpp"

namespace randsub {

// Sequence evaluation for a_n^S, the probability that the player about to move
// wins from a pile of n chips when each turn removes a uniformly random legal
// amount from S.
//
// For n >= k_max every move is legal and
//     a_n = 1 - (1/t) * sum_i a_{n - k_i}.
// Below k_max the game is the one played with S - {k_max}, so the first k_max
// values are inherited from the smaller set, down to the single-move case.

enum class NumericMode { exact, float64 };

struct EvalOptions {
  // Exact mode aborts with ResourceLimitError once a value needs more bits.
  std::size_t bit_budget = std::size_t{1} << 20;
};

// a_n for S = {k}: blocks of k zeros and k ones, starting with zeros.
Rational single_move_value(std::size_t n, std::uint32_t k);

// a_0 .. a_{k_max - 1}. For a single-element set these are all zero.
std::vector<Rational> base_values(const SubtractionSet& set);

// Streaming evaluator. Holds only a ring buffer of the last k_max values.
template <typename Value>
class SequenceStream {
 public:
  explicit SequenceStream(const SubtractionSet& set, EvalOptions options = {});

  // Returns a_n for the next n (starting at 0).
  Value next();
  // Index of the value the next call to next() will return.
  std::size_t position() const noexcept { return n_; }

 private:
  SubtractionSet set_;
  EvalOptions options_;
  std::vector<Value> ring_;
  std::size_t n_ = 0;
};

extern template class SequenceStream<Rational>;
extern template class SequenceStream<double>;

// Full-history evaluation of a_0 .. a_{n_max}.
class SequenceRun {
 public:
  const SubtractionSet& set() const noexcept { return set_; }
  NumericMode mode() const noexcept { return mode_; }
  std::size_t n_max() const noexcept { return approx_.size() - 1; }

  // Exact value. In float mode this is the exact rational of the stored double.
  Rational value(std::size_t n) const;
  double as_double(std::size_t n) const;

  std::span<const double> doubles() const noexcept { return approx_; }
  // Empty in float mode.
  std::span<const Rational> exact_values() const noexcept { return exact_; }

 private:
  friend SequenceRun eval_sequence(const SubtractionSet&, std::size_t, NumericMode, const EvalOptions&);
  SequenceRun(SubtractionSet set, NumericMode mode) : set_(std::move(set)), mode_(mode) {}

  SubtractionSet set_;
  NumericMode mode_;
  std::vector<Rational> exact_;
  std::vector<double> approx_;
};

SequenceRun eval_sequence(const SubtractionSet& set, std::size_t n_max, NumericMode mode = NumericMode::exact,
                          const EvalOptions& options = {});

struct GcdReduction {
  SubtractionSet set;      // S / m
  std::uint32_t factor;    // m = gcd(S)
};

// a^S_{m n} = a^{S/m}_n for every n.
GcdReduction gcd_reduce(const SubtractionSet& set);

// (-1)^n (a_n - 1/2). Throws std::out_of_range past run.n_max().
Rational signed_deviation(const SequenceRun& run, std::size_t n);

}  // namespace randsub
