#pragma once

#include <functional>
#include <vector>

#include "lagfun/types.hpp"

namespace lagfun {

/// Generalized Laguerre polynomial L_n^{(alpha)}(x), alpha > -1.
double laguerre(int n, double alpha, double x);

/// Orthonormal Laguerre polynomial l_n^{(alpha)} = sqrt(n!/(alpha+1)_n) L_n^{(alpha)}.
double laguerre_orthonormal(int n, double alpha, double x);

/// Normalized weight x^alpha e^{-x} / Gamma(alpha+1) on [0, inf).
double laguerre_weight(double alpha, double x);

/// Continuous dual Hahn polynomial s_n(y;a,b,c), y = x^2, evaluated as a
/// real polynomial in y (series for small n, recurrence in n above).
/// Accepts arbitrary real parameters; positivity is only required for the
/// orthogonality measure.
double cdh(int n, double y, double a, double b, double c);

struct CdhParams {
  double a, b, c;
  int smallest;  // index (0,1,2) of the smallest parameter

  /// Validates pairwise-positive sums and records which parameter is smallest.
  static CdhParams make(double a, double b, double c);
  double smallest_value() const;
  /// Parameters reordered so the smallest comes first (measure convention).
  CdhParams canonical() const;
};

/// Orthonormal polynomial S_n(y) = (-1)^n s_n / sqrt(n!(a+b)_n(a+c)_n(b+c)_n).
double cdh_orthonormal(int n, double y, const CdhParams& params);

struct CdhMeasure {
  std::function<double(double)> density;  // on x >= 0, variable y = x^2
  struct Mass {
    double y;       // location, y = -(a+k)^2
    double weight;  // >= 0
  };
  std::vector<Mass> masses;  // present only when the smallest parameter < 0
};

/// Orthogonality measure for S_n(.; params). Continuous density on x >= 0
/// plus finitely many discrete masses when the smallest parameter is < 0.
CdhMeasure cdh_measure(const CdhParams& params);

/// Integral of f against the measure: adaptive x-quadrature + mass sum.
double cdh_integrate(const CdhMeasure& m, const std::function<double(double)>& f,
                     double tol = 1e-10);

struct DecompCdhResult {
  double value;      // S_n(y; p)
  CdhParams params;  // the p-branch parameter triple of the decomposition
  CdhMeasure measure;
};

/// Tensor-product decomposition polynomial S_n(y;p) and its measure, with
/// the parameter triple chosen by the sign of p. Requires the absolutely
/// continuous regime k1+k2 >= 1/2, |k1-k2| <= 1/2.
DecompCdhResult decomp_cdh(int n, double y, int p, double k1, double k2);

}  // namespace lagfun
