#pragma once

#include <map>
#include <vector>

#include "lagfun/types.hpp"

namespace lagfun {

/// Parameters of the doubly infinite Jacobi operator. The principal mode is
/// (rho >= 0, eps in [0,1)); the complementary mode reuses every formula with
/// the substitution i*rho -> lambda + 1/2, encoded by mu().
struct PrincipalParams {
  double rho = 0.0;
  double eps = 0.0;
  bool complementary_mode = false;
  double lambda = 0.0;

  static PrincipalParams principal(double rho, double eps);
  static PrincipalParams complementary(double lambda, double eps);

  /// i*rho in principal mode, lambda + 1/2 in complementary mode. Every
  /// formula below is written in terms of mu (with -mu for the conjugate
  /// slot), which unifies the two modes.
  Cplx mu() const;
};

/// Tridiagonal coefficients: a_k = |k+eps+1/2+i rho| off-diagonal,
/// b_k = 2(k+eps) diagonal.
double coeff_a(const PrincipalParams& p, int k);
double coeff_b(const PrincipalParams& p, int k);

/// sqrt(Gamma(f+mu) Gamma(f-mu)), the mode-unified form of |Gamma(f+i rho)|.
Cplx gamma_abs_sym(const PrincipalParams& p, Cplx f);
/// sqrt(sin pi(eps+1/2+mu) sin pi(eps+1/2-mu)), unifying |sin pi(eps+1/2+i rho)|.
Cplx sinpi_abs_sym(const PrincipalParams& p);

enum class Family { s, t, u, v };

/// The four eigenfunction families of L f = -z f. u needs z off (-inf,0],
/// v needs z off [0,inf); s and t are entire in z.
Cplx solution(Family fam, const PrincipalParams& p, Cplx z, int k);

struct ConnectionCoefficients {
  // u = A s + B t, v = C s + D t; s = E u + F v, t = G u + H v.
  Cplx A, B, C, D, E, F, G, H;
  int xi;  // sign of Im z
};

/// All eight connection coefficients; requires Im z != 0 (the second system
/// is only defined off the real axis) and a nonzero spectral parameter.
ConnectionCoefficients connection(const PrincipalParams& p, Cplx z);

/// [f,g]_k = a_k (f_k g_{k+1} - f_{k+1} g_k), k-independent on solutions.
Cplx wronskian(Family f, Family g, const PrincipalParams& p, Cplx z, int k);

/// Closed form of [phi_z, Phi_z] with phi_z = z^{i rho} u(z),
/// Phi_z = (-z)^{-i rho} v(z): equals pi e^{-i pi xi (eps+1/2)} / |sin pi(eps+1/2+i rho)|,
/// the sign being fixed by the connection coefficients.
Cplx wronskian_phi_Phi(const PrincipalParams& p, Cplx z);

struct LaguerreFunctionValue {
  bool at_zero = false;
  Cplx scalar{};   // x != 0
  Cplx pair[2]{};  // x == 0: |Gamma(2 i rho)| (conj t_n(0), t_n(0))
};

/// psi_n(x): v_n(x) for x < 0, u_n(x) for x > 0, the two-vector at x = 0.
LaguerreFunctionValue laguerre_function(int n, double x, const PrincipalParams& p);

/// Weight |sin pi(eps+1/2+i rho)|^2 e^{-|x|} / pi^2 for which {psi_n} is an
/// orthonormal basis of L^2(R, w dx).
double spectral_weight(double x, const PrincipalParams& p);

/// Finitely supported vector on the integer lattice.
using SparseVec = std::map<int, Cplx>;

/// <G(z)f, g> with G(z) = (-L-z)^{-1}, from the explicit rank-structured sum
/// over the u/v eigenfunctions normalized by the Wronskian. Im z != 0.
Cplx resolvent_element(const PrincipalParams& p, Cplx z, const SparseVec& f,
                       const SparseVec& g);

/// Oracle: the same matrix element from a centered (2N+1)-section tridiagonal
/// linear solve.
Cplx finite_section_resolvent(const PrincipalParams& p, Cplx z,
                              const SparseVec& f, const SparseVec& g, int N);

struct Interval {
  double a, b;  // may be +-infinity
};

/// <E(B)f, g> for the spectral measure E of -L, B a finite union of
/// intervals: adaptive quadrature of the u/v spectral densities.
Cplx spectral_projection(const PrincipalParams& p, const std::vector<Interval>& borel,
                         const SparseVec& f, const SparseVec& g, double tol = 1e-8);

/// Gram matrix <psi_n, psi_m> under the weight w for n, m in [n_min, n_max],
/// computed in one adaptive pass per half-line.
std::vector<std::vector<Cplx>> laguerre_function_gram(const PrincipalParams& p,
                                                      int n_min, int n_max,
                                                      double tol = 1e-8);

struct AsymptoticReport {
  Cplx computed;        // family value at the far index (stable recurrence)
  Cplx leading;         // leading asymptotic term
  double deviation;     // |computed/leading - 1|
};

/// Compares the family value at index +k_max (s, u) or -k_max (t, v) against
/// the leading asymptotic term; deviation decays like k_max^{-1/2}.
/// Requires 0 < |arg z| < pi.
AsymptoticReport asymptotic_check(Family fam, const PrincipalParams& p, Cplx z,
                                  int k_max);

}  // namespace lagfun
