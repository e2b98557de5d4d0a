#include "randsub/closed_form.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "randsub/errors.hpp"

namespace randsub {
namespace {

std::complex<double> power(std::complex<double> z, std::size_t n) {
  std::complex<double> acc = 1;
  while (n) {
    if (n & 1) acc *= z;
    z *= z;
    n >>= 1;
  }
  return acc;
}

}  // namespace

std::complex<double> ClosedFormCoefficients::reconstruct(std::size_t n) const {
  std::complex<double> sum = 0.5;
  for (std::size_t j = 0; j < roots.size(); ++j) sum += alphas[j] * power(roots[j], n);
  return sum;
}

ClosedFormCoefficients closed_form_coefficients(const SubtractionSet& set, const SequenceRun& run,
                                                const RootSolverOptions& options) {
  const std::size_t k = set.max();
  if (!(run.set() == set)) throw ValidationError("sequence run belongs to a different set");
  if (run.n_max() + 1 < k) throw ValidationError("sequence run must cover indices 0.." + std::to_string(k - 1));
  const IntPolynomial chi = characteristic_poly(set);
  if (!square_free_test(chi)) throw ValidationError("characteristic polynomial has a repeated root");

  ClosedFormCoefficients out;
  for (const auto& r : find_roots(chi, options)) out.roots.push_back(r.value());

  Eigen::MatrixXcd vandermonde(k, k);
  Eigen::VectorXcd rhs(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::complex<double> p = 1;
    for (std::size_t n = 0; n < k; ++n) {
      vandermonde(n, j) = p;
      p *= out.roots[j];
    }
  }
  for (std::size_t n = 0; n < k; ++n) rhs(n) = run.as_double(n) - 0.5;

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(vandermonde);
  const Eigen::VectorXcd alpha = lu.solve(rhs);
  out.alphas.assign(alpha.data(), alpha.data() + k);
  const double rcond = lu.rcond();
  out.condition_estimate = rcond > 0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  out.ill_conditioned = out.condition_estimate > kIllConditionedThreshold;

  for (std::size_t n = 0; n < k; ++n) {
    out.residual_norm = std::max(out.residual_norm, std::abs(out.reconstruct(n) - run.as_double(n)));
  }
  auto distance = [](std::complex<double> z) { return std::abs(z + 1.0); };
  out.nearest_minus_one = static_cast<std::size_t>(
      std::min_element(out.roots.begin(), out.roots.end(),
                       [&](auto a, auto b) { return distance(a) < distance(b); }) -
      out.roots.begin());
  return out;
}

}  // namespace randsub
