#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lagfun {

using Cplx = std::complex<double>;

constexpr double pi = 3.141592653589793238462643383279502884;

/// Evaluation hit a parameter pole (e.g. Gamma at a nonpositive integer).
struct PoleError : std::domain_error {
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Argument lies on a branch cut where the principal branch is undefined.
struct BranchCutError : std::domain_error {
  explicit BranchCutError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative scheme (series, quadrature) failed to reach the requested
/// accuracy. Carries the best estimate and the accuracy actually achieved.
struct NonConvergence : std::runtime_error {
  NonConvergence(const std::string& what, Cplx best, double achieved)
      : std::runtime_error(what), best_estimate(best), achieved_error(achieved) {}
  Cplx best_estimate;
  double achieved_error;
};

inline bool is_nonpositive_integer(Cplx z) {
  if (z.imag() != 0.0) return false;
  double r = z.real();
  return r <= 0.0 && r == std::floor(r);
}

}  // namespace lagfun
