#include "randsub/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "randsub/errors.hpp"

namespace randsub {
namespace {

using cplx = std::complex<double>;

struct Evaluation {
  cplx value;
  cplx slope;
  double bound;  // sum |c_i| |z|^i, scales the rounding error of `value`
};

Evaluation horner(const std::vector<double>& c, cplx z) {
  cplx p = c.back();
  cplx dp = 0;
  double bound = std::abs(c.back());
  const double r = std::abs(z);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
    bound = bound * r + std::abs(c[i]);
  }
  return {p, dp, bound};
}

std::vector<cplx> aberth(const std::vector<double>& c, const RootSolverOptions& options) {
  const std::size_t d = c.size() - 1;
  const double radius = std::pow(std::abs(c.front()) / std::abs(c.back()), 1.0 / static_cast<double>(d));
  std::vector<cplx> z(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(d) + options.angle_offset;
    z[j] = std::polar(radius, angle);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<bool> frozen(d, false);
  for (int it = 0; it < options.max_iterations; ++it) {
    bool moved = false;
    for (std::size_t j = 0; j < d; ++j) {
      if (frozen[j]) continue;
      const Evaluation e = horner(c, z[j]);
      if (std::abs(e.value) <= 4 * eps * e.bound) {
        frozen[j] = true;
        continue;
      }
      cplx repulsion = 0;
      for (std::size_t k = 0; k < d; ++k) {
        if (k != j) repulsion += 1.0 / (z[j] - z[k]);
      }
      const cplx newton = e.value / e.slope;
      cplx step = newton / (1.0 - newton * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = cplx(1e-7, 1e-7);
      z[j] -= step;
      moved = true;
      if (std::abs(step) < options.step_tol * std::max(1.0, std::abs(z[j]))) frozen[j] = true;
    }
    if (!moved) break;
  }
  return z;
}

// A few Newton steps, kept only while they reduce the residual.
cplx polish(const std::vector<double>& c, cplx z) {
  Evaluation e = horner(c, z);
  for (int i = 0; i < 3; ++i) {
    if (e.slope == cplx(0)) break;
    const cplx candidate = z - e.value / e.slope;
    const Evaluation next = horner(c, candidate);
    if (!(std::abs(next.value) < std::abs(e.value))) break;
    z = candidate;
    e = next;
  }
  return z;
}

}  // namespace

std::vector<ComplexRoot> find_roots(const IntPolynomial& p, const RootSolverOptions& options) {
  if (p.degree() < 1) throw ValidationError("root finding needs degree >= 1");

  std::size_t zero_roots = 0;
  while (p.coeffs()[zero_roots] == 0) ++zero_roots;
  std::vector<double> reduced;
  for (std::size_t i = zero_roots; i < p.coeffs().size(); ++i) reduced.push_back(p.coeffs()[i].get_d());
  std::vector<double> full;
  for (const auto& coefficient : p.coeffs()) full.push_back(coefficient.get_d());

  std::vector<cplx> z(zero_roots, cplx(0));
  if (reduced.size() > 1) {
    for (cplx root : aberth(reduced, options)) z.push_back(polish(reduced, root));
  }

  std::vector<ComplexRoot> roots;
  roots.reserve(z.size());
  std::vector<double> residuals;
  bool ok = true;
  for (cplx root : z) {
    const double residual = std::abs(horner(full, root).value);
    roots.push_back({root.real(), root.imag(), residual, std::abs(root)});
    residuals.push_back(residual);
    ok = ok && residual <= options.tol;
  }
  if (!ok) {
    throw NonConvergenceError("root solver did not reach residual " + std::to_string(options.tol) + " for " +
                                  p.to_text(),
                              std::move(residuals));
  }
  return roots;
}

std::vector<ComplexRoot> find_roots(const IntPolynomial& p, double tol) {
  RootSolverOptions options;
  options.tol = tol;
  return find_roots(p, options);
}

RootAnalysis analyze_roots(const SubtractionSet& set, double eps, const RootSolverOptions& options) {
  const IntPolynomial chi = characteristic_poly(set);
  RootAnalysis a;
  a.roots = find_roots(chi, options);
  a.has_minus_one = eval_integer(chi, -1) == 0;
  a.square_free = square_free_test(chi);

  if (a.has_minus_one) {
    auto distance = [](const ComplexRoot& r) { return std::abs(r.value() + 1.0); };
    auto nearest = std::min_element(a.roots.begin(), a.roots.end(),
                                    [&](const auto& x, const auto& y) { return distance(x) < distance(y); });
    a.minus_one_index = static_cast<std::size_t>(nearest - a.roots.begin());
  }
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    const auto& r = a.roots[i];
    a.max_modulus = std::max(a.max_modulus, r.modulus);
    if (std::abs(r.modulus - 1.0) <= eps) a.unit_roots.push_back(r);
    if (a.minus_one_index != i) a.spectral_gap = std::max(a.spectral_gap, r.modulus);
  }
  // Lagrange's bound gives max |z| <= max(1, sum |c_i / c_d|) = 1 for chi_S.
  if (a.max_modulus > 1.0 + eps) {
    throw std::logic_error("root modulus " + std::to_string(a.max_modulus) + " exceeds the Lagrange bound for " +
                           set.to_string());
  }
  return a;
}

}  // namespace randsub
