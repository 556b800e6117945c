#pragma once

#include "lagfun/orthopoly.hpp"
#include "lagfun/types.hpp"

namespace lagfun {

/// Tensor-product parameters in the absolutely continuous regime
/// k1+k2 >= 1/2, |k1-k2| <= 1/2, with eps = k1-k2+L normalized into [0,1).
struct TensorParams {
  double k1, k2;
  double eps;
  int L;
  static TensorParams make(double k1, double k2);
};

struct DecompCoefficient {
  double coefficient;     // (-1)^{n2} S_n(y; n1-n2), n = min(n1,n2)
  double density_factor;  // sqrt of the orthogonality density at x = sqrt(y)
  CdhParams params;
};

/// Coefficient of the coupled basis vector in the decomposition of
/// e_{n1} x e_{n2}, with its half-density factor.
DecompCoefficient decomp_coefficient(const TensorParams& tp, int n1, int n2,
                                     double y);

/// Integral of the coefficient product over the orthogonality measure for a
/// fixed diagonal n1-n2 = m1-m2; equals delta_{(n1,n2),(m1,m2)}.
double decomp_pairing(const TensorParams& tp, int n1, int n2, int m1, int m2,
                      double tol = 1e-10);

struct CgConstants {
  Cplx c_minus, c_zero, c_plus;
};

/// The three coupling constants of the parabolic-basis decomposition; the
/// x-difference powers |x1-x2|^{1/2-k1-k2 -+ i rho} are kept inside c_minus
/// and c_plus. c_zero is argument-free and pairs against the two-vector
/// value of the lattice eigenfunction at zero.
CgConstants cg_constants(const TensorParams& tp, double rho, double x1,
                         double x2);

struct CgNormalizationResult {
  Cplx integral;     // should equal 1
  double deviation;  // |integral - 1|
};

/// Numerically evaluates the normalization identity behind the coupling
/// constants at a sample point x > 0, t > 0.
CgNormalizationResult verify_cg_normalization(const TensorParams& tp, double x,
                                              double t, double tol = 1e-9);

struct ProductFormulaResult {
  double lhs;  // l_{n1}^{(2k1-1)}(x1) l_{n2}^{(2k2-1)}(x2), orthonormal
  Cplx rhs;
  double residual;
  bool absolute_mode;  // true when |lhs| is below the relative-error floor
};

/// Product formula check: the Laguerre polynomial product against the
/// spectral integral over rho, in the regime-appropriate form
/// (x1 > x2, x1 < x2, or x1 = x2 > 0).
ProductFormulaResult verify_product_formula(int n1, int n2, double k1,
                                            double k2, double x1, double x2,
                                            double tol = 1e-9);

/// Residual of the coupled-Casimir three-term recurrence on the decomposition
/// coefficients at eigenvalue rho^2 + 1/4.
double cg_recurrence_residual(const TensorParams& tp, double rho, int n1,
                              int n2);

}  // namespace lagfun
