#pragma once

#include <functional>
#include <vector>

#include "lagfun/types.hpp"

namespace lagfun {

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // strictly positive
  enum class Domain { finite_interval, semi_infinite_exp_weight } domain;
};

/// n-point Gauss-Laguerre rule for the weight x^alpha e^{-x} on [0,inf),
/// exact for polynomials of degree <= 2n-1. Golub-Welsch construction.
QuadratureRule gauss_laguerre(int n, double alpha);

struct IntegralEstimate {
  Cplx value{};
  double error_estimate = 0.0;
  long evaluations = 0;
};

struct IntegrationDomain {
  double a = 0.0, b = 0.0;
  bool upper_infinite = false;
  static IntegrationDomain finite(double a, double b) { return {a, b, false}; }
  static IntegrationDomain half_line(double a) { return {a, 0.0, true}; }
};

/// Adaptive Gauss-Kronrod (G7/K15) integration. Converged when the summed
/// error estimate is <= tol * max(1, |value|). Semi-infinite domains are
/// mapped by x = a - ln u. Throws NonConvergence (with the best estimate)
/// if the evaluation budget runs out first.
IntegralEstimate integrate(const std::function<Cplx(double)>& f,
                           IntegrationDomain domain, double tol,
                           long max_evaluations = 400000);

struct VectorIntegralEstimate {
  std::vector<Cplx> value;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// Same adaptive scheme for a vector-valued integrand (all components share
/// the subdivision); the error estimate is the max-norm over components.
VectorIntegralEstimate integrate_vector(
    const std::function<std::vector<Cplx>(double)>& f, int dim,
    IntegrationDomain domain, double tol, long max_evaluations = 400000);

}  // namespace lagfun
