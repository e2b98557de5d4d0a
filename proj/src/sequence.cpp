#include "randsub/sequence.hpp"

#include <stdexcept>
#include <string>

#include "randsub/errors.hpp"

namespace randsub {
namespace {

void check_budget(const Rational& q, const EvalOptions& options, std::size_t n) {
  if (bit_size(q) > options.bit_budget) {
    throw ResourceLimitError("exact value a_" + std::to_string(n) + " exceeds the bit budget of " +
                             std::to_string(options.bit_budget) + " bits; use float mode");
  }
}

void check_budget(double, const EvalOptions&, std::size_t) {}

template <typename Value>
Value from_rational(const Rational& q) {
  if constexpr (std::is_same_v<Value, double>) {
    return q.get_d();
  } else {
    return q;
  }
}

// a_n = 1 - (1/t) sum_i a_{n-k_i}; `at` maps an index to a stored value.
template <typename Value, typename Lookup>
Value recurrence_step(const SubtractionSet& set, Lookup at) {
  Value sum = 0;
  for (auto k : set.elements()) sum += at(k);
  if constexpr (std::is_same_v<Value, double>) {
    return 1.0 - sum / static_cast<double>(set.size());
  } else {
    Value out = 1 - sum / static_cast<unsigned long>(set.size());
    out.canonicalize();
    return out;
  }
}

// Inductive base: the prefix of S - {k_max} is reused as-is, then extended by
// the smaller set's own recurrence up to k_max.
template <typename Value>
std::vector<Value> build_base(const SubtractionSet& set, const EvalOptions& options) {
  if (set.size() == 1) {
    std::vector<Value> out;
    out.reserve(set.max());
    for (std::size_t n = 0; n < set.max(); ++n) out.push_back(from_rational<Value>(single_move_value(n, set.max())));
    return out;
  }
  SubtractionSet smaller = set.without_max();
  std::vector<Value> values = build_base<Value>(smaller, options);
  values.reserve(set.max());
  for (std::size_t n = values.size(); n < set.max(); ++n) {
    Value v = recurrence_step<Value>(smaller, [&](std::size_t k) -> const Value& { return values[n - k]; });
    check_budget(v, options, n);
    values.push_back(std::move(v));
  }
  return values;
}

}  // namespace

Rational single_move_value(std::size_t n, std::uint32_t k) {
  if (k == 0) throw ValidationError("move size must be positive");
  return Rational((n / k) % 2 == 1 ? 1 : 0);
}

std::vector<Rational> base_values(const SubtractionSet& set) { return build_base<Rational>(set, EvalOptions{}); }

template <typename Value>
SequenceStream<Value>::SequenceStream(const SubtractionSet& set, EvalOptions options)
    : set_(set), options_(options), ring_(build_base<Value>(set, options)) {}

template <typename Value>
Value SequenceStream<Value>::next() {
  const std::size_t window = ring_.size();
  const std::size_t n = n_++;
  if (n < window) return ring_[n];
  Value v = recurrence_step<Value>(set_, [&](std::size_t k) -> const Value& { return ring_[(n - k) % window]; });
  check_budget(v, options_, n);
  ring_[n % window] = v;
  return v;
}

template class SequenceStream<Rational>;
template class SequenceStream<double>;

Rational SequenceRun::value(std::size_t n) const {
  if (n > n_max()) throw std::out_of_range("index " + std::to_string(n) + " beyond n_max");
  if (mode_ == NumericMode::exact) return exact_[n];
  return Rational(approx_[n]);
}

double SequenceRun::as_double(std::size_t n) const {
  if (n > n_max()) throw std::out_of_range("index " + std::to_string(n) + " beyond n_max");
  return approx_[n];
}

SequenceRun eval_sequence(const SubtractionSet& set, std::size_t n_max, NumericMode mode, const EvalOptions& options) {
  SequenceRun run(set, mode);
  run.approx_.reserve(n_max + 1);
  if (mode == NumericMode::exact) {
    run.exact_.reserve(n_max + 1);
    SequenceStream<Rational> stream(set, options);
    for (std::size_t n = 0; n <= n_max; ++n) {
      run.exact_.push_back(stream.next());
      run.approx_.push_back(run.exact_.back().get_d());
    }
  } else {
    SequenceStream<double> stream(set, options);
    for (std::size_t n = 0; n <= n_max; ++n) run.approx_.push_back(stream.next());
  }
  return run;
}

GcdReduction gcd_reduce(const SubtractionSet& set) {
  const auto m = set.gcd();
  std::vector<std::int64_t> reduced;
  reduced.reserve(set.size());
  for (auto k : set.elements()) reduced.push_back(k / m);
  return {make_set(reduced), m};
}

Rational signed_deviation(const SequenceRun& run, std::size_t n) {
  Rational dev = run.value(n) - Rational(1, 2);
  return n % 2 == 0 ? dev : Rational(-dev);
}

}  // namespace randsub
