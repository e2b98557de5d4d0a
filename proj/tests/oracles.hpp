#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's evaluation paths.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

// a_n straight from the rules of play: uniform over legal moves k <= n,
// a loss when no move is legal. No inductive base, no recurrence order.
inline std::vector<Q> game_values(const std::vector<std::uint32_t>& set, std::size_t n_max) {
  std::vector<Q> a(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Q sum = 0;
    unsigned legal = 0;
    for (auto k : set) {
      if (k <= n) {
        sum += 1 - a[n - k];
        ++legal;
      }
    }
    a[n] = legal ? Q(sum / legal) : Q(0);
    a[n].canonicalize();
  }
  return a;
}

// alpha1 as the residue at x = -1 of the generating function A(x) = sum a_n x^n.
// With D(x) = t + sum x^{k_i}, D(x) A(x) = N(x) + t x^{k_max} / (1 - x) where
// N collects the first k_max coefficients. For all-odd S, D(-1) = 0 and
//   alpha1 = lim (1 + x) A(x) = (2 N(-1) - t) / (2 D'(-1)),  D'(-1) = sum k_i.
inline Q alpha1_generating_function(const std::vector<std::uint32_t>& set) {
  const std::size_t k_max = set.back();
  const auto a = game_values(set, k_max);
  const long t = static_cast<long>(set.size());
  Q n_at_minus_one = 0;
  long sum_k = 0;
  for (auto k : set) sum_k += k;
  for (std::size_t n = 0; n < k_max; ++n) {
    Q c = t * a[n];
    for (auto k : set) {
      if (k <= n) c += a[n - k];
    }
    n_at_minus_one += (n % 2 == 0) ? c : Q(-c);
  }
  Q out = (2 * n_at_minus_one - t) / (2 * sum_k);
  out.canonicalize();
  return out;
}

// Determinant by fraction-free Bareiss elimination.
inline Z bareiss_determinant(std::vector<std::vector<Z>> m) {
  const std::size_t n = m.size();
  Z prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Z v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Resultant of p and p' (ascending coefficients) via the Sylvester matrix.
// Zero exactly when p has a repeated root.
inline Z discriminant_resultant(const std::vector<Z>& p) {
  const std::size_t d = p.size() - 1;
  std::vector<Z> dp(d);
  for (std::size_t i = 1; i <= d; ++i) dp[i - 1] = p[i] * static_cast<unsigned long>(i);
  const std::size_t e = d - 1;
  const std::size_t size = d + e;
  std::vector<std::vector<Z>> m(size, std::vector<Z>(size, 0));
  for (std::size_t r = 0; r < e; ++r) {
    for (std::size_t i = 0; i <= d; ++i) m[r][r + i] = p[d - i];
  }
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i <= e; ++i) m[e + r][r + i] = dp[e - i];
  }
  return bareiss_determinant(std::move(m));
}

// Multi-pile value by exhaustive recursion without memo or symmetry folding.
// pile_first: uniform over piles with a legal move, then over moves in the pile.
inline Q multipile_brute(const std::vector<std::vector<std::uint32_t>>& sets, std::vector<std::size_t> pos) {
  std::size_t movable = 0;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (auto k : sets[j]) {
      if (k <= pos[j]) {
        ++movable;
        break;
      }
    }
  }
  if (movable == 0) return 0;
  Q value = 0;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    std::vector<std::uint32_t> legal;
    for (auto k : sets[j]) {
      if (k <= pos[j]) legal.push_back(k);
    }
    for (auto k : legal) {
      pos[j] -= k;
      value += Q(1, static_cast<unsigned long>(movable * legal.size())) * (1 - multipile_brute(sets, pos));
      pos[j] += k;
    }
  }
  value.canonicalize();
  return value;
}

// Random strictly increasing set with max <= k_max and 1 <= size <= t_max.
inline std::vector<std::uint32_t> random_set(std::mt19937& rng, unsigned t_max, unsigned k_max, bool odd_only = false) {
  std::uniform_int_distribution<unsigned> pick(1, k_max);
  std::uniform_int_distribution<unsigned> size(1, t_max);
  const unsigned t = size(rng);
  std::map<unsigned, bool> chosen;
  for (int guard = 0; chosen.size() < t && guard < 1000; ++guard) {
    unsigned k = pick(rng);
    if (odd_only && k % 2 == 0) k = k > 1 ? k - 1 : 1;
    chosen[k] = true;
  }
  std::vector<std::uint32_t> out;
  for (auto& [k, _] : chosen) out.push_back(k);
  return out;
}

}  // namespace oracle
