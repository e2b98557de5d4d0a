#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "randsub/roots.hpp"
#include "randsub/sequence.hpp"

namespace randsub {

// a_n = sum_j alpha_j z_j^n + 1/2, with z_j the roots of chi_S and alpha_j
// fitted to the first k_max values through the Vandermonde system.
struct ClosedFormCoefficients {
  std::vector<std::complex<double>> roots;
  std::vector<std::complex<double>> alphas;
  double residual_norm = 0;       // max |reconstruct(n) - a_n| for n < k_max
  double condition_estimate = 0;  // 1 / rcond of the Vandermonde LU
  bool ill_conditioned = false;
  std::size_t nearest_minus_one = 0;

  // Coefficient paired with the root nearest -1.
  std::complex<double> alpha1_candidate() const { return alphas[nearest_minus_one]; }
  std::complex<double> reconstruct(std::size_t n) const;
};

inline constexpr double kIllConditionedThreshold = 1e12;

// Requires run to cover 0 .. k_max - 1 and chi_S to be square-free (a repeated
// root makes the system singular); throws ValidationError otherwise.
ClosedFormCoefficients closed_form_coefficients(const SubtractionSet& set, const SequenceRun& run,
                                                const RootSolverOptions& options = {});

}  // namespace randsub
