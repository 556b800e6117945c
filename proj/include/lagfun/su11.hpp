#pragma once

#include <functional>
#include <vector>

#include "lagfun/types.hpp"

namespace lagfun {

enum class Series { positive, negative, principal, complementary };
enum class Gen { H, B, C, X, Omega };

struct RepLabel {
  Series series;
  double k = 0.0;       // discrete series
  double rho = 0.0;     // principal
  double eps = 0.0;     // principal / complementary
  double lambda = 0.0;  // complementary

  static RepLabel positive(double k);
  static RepLabel negative(double k);
  static RepLabel principal(double rho, double eps);
  static RepLabel complementary(double lambda, double eps);

  bool doubly_infinite() const {
    return series == Series::principal || series == Series::complementary;
  }
  /// k(1-k), rho^2+1/4, or -lambda(1+lambda).
  double casimir_scalar() const;
};

/// Tridiagonal action on the basis: gen e_n = lower(n) e_{n-1} + diag(n) e_n
/// + upper(n) e_{n+1}. X is assembled as -H+B-C, Omega is diagonal.
struct TridiagonalAction {
  std::function<double(int)> lower, diag, upper;
  bool doubly_infinite;
};

TridiagonalAction action(const RepLabel& label, Gen gen);

/// Dense truncation: rows/columns are basis indices 0..N (discrete series)
/// or -N..N (doubly infinite series).
std::vector<std::vector<double>> action_matrix(const RepLabel& label, Gen gen,
                                               int N);

/// Max interior-row residual of [H,B]=2B, [H,C]=-2C, [B,C]=H and of
/// Omega = -1/4 (H^2+2H+4CB) on an N-truncation. Interior rows keep a
/// distance of at least 2 from the truncation boundary.
double commutator_check(const RepLabel& label, int N);

/// Lemma identities B = [H,X]/4 + X/2 + H/2 and C = [H,X]/4 - X/2 - H/2.
double lemma_hx_check(const RepLabel& label, int N);

/// *-structure: truncated B equals minus the transpose of truncated C.
double star_structure_check(const RepLabel& label, int N);

/// Omega truncation minus its scalar, interior rows.
double casimir_scalar_check(const RepLabel& label, int N);

/// Discrete series only: entrywise match of the X coefficients with the
/// (sign-flipped) orthonormal-Laguerre recurrence coefficients, alpha = 2k-1.
double x_intertwine_check(const RepLabel& label, int N);

/// pi_k^+(theta(Y)) = pi_k^-(Y) for theta: H -> -H, B -> C, C -> B.
double theta_isomorphism_check(double k, int N);

/// Dense univariate polynomial, lowest-degree-first coefficients.
using Poly = std::vector<double>;

/// Differential operator with polynomial coefficients: sum_j terms[j] d^j/dx^j.
struct PolyOp {
  std::vector<Poly> terms;
  Poly apply(const Poly& p) const;
};

PolyOp poly_op_add(const PolyOp& a, const PolyOp& b, double wa = 1.0,
                   double wb = 1.0);
PolyOp poly_op_compose(const PolyOp& outer, const PolyOp& inner);

/// The H/B/C realizations as differential operators on polynomials
/// (positive and negative discrete series only).
PolyOp diff_realization(Series s, double k, Gen gen);

/// Bivariate polynomial coefficients: grid[i][j] multiplies x1^i x2^j.
using BivarPoly = std::vector<std::vector<double>>;

/// The coupled Casimir applied to p(x1) q(x2): the explicit bivariate
/// second-order operator.
BivarPoly delta_omega_apply(double k1, double k2, const Poly& p, const Poly& q);

/// Same element assembled as 1 x Omega + Omega x 1 - H x H / 2 - (C x B + B x C)
/// from the realized univariate operators.
BivarPoly delta_omega_composed(double k1, double k2, const Poly& p,
                               const Poly& q);

/// Eigen-residual of the reduced single-variable operator on the coupled
/// eigenfunction: Jacobi function for t != 0 (finite differences, Richardson
/// refined), the Euler-equation power solution for t = 0 (analytic).
double xi_residual(double rho, double k1, double k2, double t, double x);

}  // namespace lagfun
