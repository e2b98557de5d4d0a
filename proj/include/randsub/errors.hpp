#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace randsub {

// Bad user input: malformed sets, out-of-range bounds, unmet preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource limit (exact-mode bit budget, memo size) was hit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The root solver did not reach the requested residual.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), residuals_(std::move(residuals)) {}

  // Residuals of the best iterate, one per root.
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

}  // namespace randsub
