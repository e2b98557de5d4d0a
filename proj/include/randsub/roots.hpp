#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "randsub/polynomial.hpp"
#include "randsub/subtraction_set.hpp"

namespace randsub {

struct ComplexRoot {
  double re = 0;
  double im = 0;
  double residual = 0;  // |p(z)|
  double modulus = 0;   // |z|

  std::complex<double> value() const { return {re, im}; }
};

struct RootSolverOptions {
  double tol = 1e-12;          // required final residual |p(z)|
  int max_iterations = 500;
  double step_tol = 1e-14;     // a root is frozen once its correction is this small
  double angle_offset = 0.4;   // rotation of the initial circle, radians
};

// All complex roots of p by Aberth-Ehrlich simultaneous iteration followed by
// Newton polishing. Initial guesses are equally spaced on the circle of radius
// (|c_0| / |c_d|)^(1/d), rotated by a fixed offset, so results are
// deterministic. Exact zero roots are split off first.
// Throws ValidationError for degree < 1 and NonConvergenceError if some root's
// residual stays above options.tol.
std::vector<ComplexRoot> find_roots(const IntPolynomial& p, const RootSolverOptions& options = {});
std::vector<ComplexRoot> find_roots(const IntPolynomial& p, double tol);

struct RootAnalysis {
  std::vector<ComplexRoot> roots;
  double max_modulus = 0;
  bool has_minus_one = false;              // chi_S(-1) == 0, decided exactly
  std::optional<std::size_t> minus_one_index;  // root nearest -1, when has_minus_one
  std::vector<ComplexRoot> unit_roots;     // | |z| - 1 | <= eps
  double spectral_gap = 0;                 // max |z| over roots other than -1
  bool square_free = false;                // decided exactly
};

// Roots of chi_S together with the exact checks. Throws std::logic_error if the
// numerical roots violate the modulus bound max |z| <= 1 + eps.
RootAnalysis analyze_roots(const SubtractionSet& set, double eps = 1e-8, const RootSolverOptions& options = {});

}  // namespace randsub
