#pragma once

#include <functional>
#include <vector>

#include "lagfun/types.hpp"

namespace lagfun {

struct JacobiParams {
  double alpha, beta;
  static JacobiParams make(double alpha, double beta);
};

/// Jacobi function phi_lambda^{(alpha,beta)}(x) for x >= 0:
/// 2F1((alpha+beta+1-i lambda)/2, (alpha+beta+1+i lambda)/2; alpha+1; -x).
/// Large real lambda is handled by Taylor continuation of the hypergeometric
/// ODE from a small starting point where the series is still stable.
Cplx jacobi_fn(Cplx lambda, const JacobiParams& p, double x);

/// Weight 2^{2 alpha + 2 beta + 1} x^alpha (1+x)^beta on [0, inf).
double jacobi_weight(const JacobiParams& p, double x);

/// Harish-Chandra c-function; pole at lambda = 0.
Cplx c_function(Cplx lambda, const JacobiParams& p);

struct PlancherelMeasure {
  std::function<double(double)> density;  // |c(lambda)|^{-2} on lambda > 0
  struct DiscretePoint {
    Cplx lambda;    // i(|beta|-alpha-1-2j), on the positive imaginary axis
    double weight;  // -i Res_{mu=lambda} (c(mu)c(-mu))^{-1}, real positive
  };
  std::vector<DiscretePoint> points;  // empty iff |beta| <= alpha+1
};

/// Continuous density plus the discrete residue terms of the inversion
/// measure; residues by a small-circle numerical contour.
PlancherelMeasure plancherel(const JacobiParams& p);

struct SampledTransform {
  std::vector<double> grid;           // uniform, starting at 0
  std::vector<Cplx> values;           // (F f)(lambda) on the grid
  std::vector<Cplx> discrete_values;  // aligned with PlancherelMeasure::points
};

/// (F f)(lambda) = int_0^inf f(x) phi_lambda(x) Delta(x) dx on the grid and
/// at the discrete spectral points.
SampledTransform jacobi_transform(const std::function<double(double)>& f,
                                  const JacobiParams& p,
                                  const std::vector<double>& grid,
                                  double tol = 1e-9);

/// Inversion at x: (1/2pi) int F(lambda) phi_lambda(x) |c|^{-2} dlambda over
/// the sampled grid (composite Simpson) plus the discrete terms.
Cplx jacobi_inverse(const SampledTransform& F, const JacobiParams& p, double x);

}  // namespace lagfun
