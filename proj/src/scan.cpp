#include "randsub/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>

#include "randsub/convergence.hpp"
#include "randsub/errors.hpp"
#include "randsub/polynomial.hpp"

namespace randsub {
namespace {

std::atomic<int> g_threads{0};

// Fills out[i] = kernel(items[i]). Exceptions from worker threads are
// rethrown on the calling thread (first one by index wins).
template <typename Item, typename Result, typename Kernel>
void run_kernel(const std::vector<Item>& items, std::vector<Result>& out, Backend backend, Kernel kernel) {
  out.resize(items.size());
  if (backend == Backend::serial) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = kernel(items[i]);
    return;
  }
  std::vector<std::exception_ptr> errors(items.size());
  const long count = static_cast<long>(items.size());
  const int threads = g_threads.load() > 0 ? g_threads.load() : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = kernel(items[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void combinations(std::vector<std::int64_t>& chosen, std::int64_t next, std::int64_t top, std::size_t remaining,
                  std::int64_t stride, std::int64_t max_elem, std::vector<SubtractionSet>& out) {
  if (remaining == 0) {
    std::int64_t g = max_elem;
    for (auto k : chosen) g = std::gcd(g, k);
    if (g != 1) return;
    std::vector<std::int64_t> elems = chosen;
    elems.push_back(max_elem);
    out.push_back(make_set(elems));
    return;
  }
  for (std::int64_t k = next; k < top; k += stride) {
    chosen.push_back(k);
    combinations(chosen, k + stride, top, remaining - 1, stride, max_elem, out);
    chosen.pop_back();
  }
}

}  // namespace

void set_scan_threads(int threads) { g_threads.store(threads); }

std::vector<SubtractionSet> enumerate_sets(unsigned t_max, unsigned k_max, SetFilter filter) {
  if (t_max == 0 || k_max == 0) throw ValidationError("scan bounds must be at least 1");
  const bool odd_only = filter == SetFilter::all_odd_coprime;
  const std::int64_t stride = odd_only ? 2 : 1;
  std::vector<SubtractionSet> out;
  for (unsigned t = 1; t <= t_max; ++t) {
    for (std::int64_t m = 1; m <= static_cast<std::int64_t>(k_max); m += stride) {
      std::vector<std::int64_t> chosen;
      combinations(chosen, 1, m, t - 1, stride, m, out);
    }
  }
  return out;
}

ConjectureReport scan_conjecture(unsigned t_max, unsigned k_max, Backend backend) {
  const auto sets = enumerate_sets(t_max, k_max, SetFilter::all_odd_coprime);
  std::vector<char> square_free;
  run_kernel(sets, square_free, backend,
             [](const SubtractionSet& s) -> char { return square_free_test(characteristic_poly(s)); });

  ConjectureReport report;
  report.records.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    report.records.push_back({sets[i], square_free[i] != 0});
    if (square_free[i]) {
      ++report.verified;
    } else {
      report.failures.push_back(sets[i]);
    }
  }
  return report;
}

QuestionReport scan_question(unsigned t_max, unsigned k_max, Backend backend) {
  const auto sets = enumerate_sets(t_max, k_max, SetFilter::all_odd_coprime);
  std::vector<Rational> alphas;
  run_kernel(sets, alphas, backend, [](const SubtractionSet& s) { return alpha1_general(s); });

  QuestionReport report;
  report.records.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Rational& a = alphas[i];
    report.records.push_back({sets[i], a});
    if (a == 0) ++report.zero_count;
    if (a < 0) ++report.negative_count;
    const Rational mag = abs(a);
    if (!report.min_abs_alpha1 || mag < *report.min_abs_alpha1) report.min_abs_alpha1 = mag;
    if (!report.max_alpha1 || a > *report.max_alpha1) report.max_alpha1 = a;
  }
  return report;
}

RootReport scan_roots(unsigned t_max, unsigned k_max, Backend backend, double bound_eps,
                      const RootSolverOptions& options) {
  const auto sets = enumerate_sets(t_max, k_max, SetFilter::coprime);
  struct Metrics {
    bool minus_one = false;
    double max_modulus = 0, gap = 0;
  };
  std::vector<Metrics> metrics;
  run_kernel(sets, metrics, backend, [&](const SubtractionSet& s) {
    const IntPolynomial chi = characteristic_poly(s);
    const auto roots = find_roots(chi, options);
    const bool minus_one = eval_integer(chi, -1) == 0;
    double max_modulus = 0, gap = 0, nearest = 1e300;
    std::size_t nearest_index = roots.size();
    if (minus_one) {
      for (std::size_t i = 0; i < roots.size(); ++i) {
        const double dist = std::abs(roots[i].value() + 1.0);
        if (dist < nearest) {
          nearest = dist;
          nearest_index = i;
        }
      }
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
      max_modulus = std::max(max_modulus, roots[i].modulus);
      if (i != nearest_index) gap = std::max(gap, roots[i].modulus);
    }
    return Metrics{minus_one, max_modulus, gap};
  });

  RootReport report;
  report.records.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    report.records.push_back({sets[i], sets[i].all_odd(), metrics[i].minus_one, metrics[i].max_modulus, metrics[i].gap});
  }
  for (const auto& r : report.records) {
    if (r.minus_one_is_root != r.all_odd) ++report.parity_law_violations;
    if (r.max_modulus > 1.0 + bound_eps) ++report.bound_violations;
    report.max_modulus_seen = std::max(report.max_modulus_seen, r.max_modulus);
  }
  return report;
}

}  // namespace randsub
