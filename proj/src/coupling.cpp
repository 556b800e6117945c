#include "lagfun/coupling.hpp"

#include <cmath>
#include <stdexcept>

#include "lagfun/gamma.hpp"
#include "lagfun/hypergeometric.hpp"
#include "lagfun/jacobi_function.hpp"
#include "lagfun/laguerre_operator.hpp"
#include "lagfun/quadrature.hpp"

namespace lagfun {

TensorParams TensorParams::make(double k1, double k2) {
  if (!(k1 > 0.0) || !(k2 > 0.0))
    throw std::invalid_argument("TensorParams: k1, k2 must be positive");
  if (!(k1 + k2 >= 0.5) || !(std::abs(k1 - k2) <= 0.5))
    throw std::invalid_argument(
        "TensorParams: requires k1+k2 >= 1/2 and |k1-k2| <= 1/2");
  const int L = -static_cast<int>(std::floor(k1 - k2));
  double eps = k1 - k2 + L;
  if (eps >= 1.0) eps -= 1.0;  // guard the k1-k2 integer edge
  return TensorParams{k1, k2, eps, L};
}

DecompCoefficient decomp_coefficient(const TensorParams& tp, int n1, int n2,
                                     double y) {
  if (n1 < 0 || n2 < 0)
    throw std::invalid_argument("decomp_coefficient: negative index");
  if (y < 0.0)
    throw std::domain_error("decomp_coefficient: requires y >= 0");
  const int n = std::min(n1, n2);
  DecompCdhResult r = decomp_cdh(n, y, n1 - n2, tp.k1, tp.k2);
  const double sign = (n2 % 2 == 0) ? 1.0 : -1.0;
  return {sign * r.value, std::sqrt(r.measure.density(std::sqrt(y))),
          r.params};
}

double decomp_pairing(const TensorParams& tp, int n1, int n2, int m1, int m2,
                      double tol) {
  if (n1 - n2 != m1 - m2)
    throw std::invalid_argument(
        "decomp_pairing: indices must lie on the same diagonal");
  const int n = std::min(n1, n2), m = std::min(m1, m2);
  DecompCdhResult r = decomp_cdh(n, 0.0, n1 - n2, tp.k1, tp.k2);
  const double sign = ((n2 + m2) % 2 == 0) ? 1.0 : -1.0;
  return sign * cdh_integrate(
                    r.measure,
                    [&](double y) {
                      return cdh_orthonormal(n, y, r.params) *
                             cdh_orthonormal(m, y, r.params);
                    },
                    tol);
}

CgConstants cg_constants(const TensorParams& tp, double rho, double x1,
                         double x2) {
  if (!(rho > 0.0)) throw PoleError("cg_constants: pole at rho = 0");
  const double k1 = tp.k1, k2 = tp.k2;
  const double signL = (tp.L % 2 == 0) ? 1.0 : -1.0;
  const Cplx irho(0.0, rho);
  const double g_sum = gamma_abs(Cplx(k1 + k2 - 0.5, rho));
  const double g_2irho = gamma_abs(2.0 * irho);

  // The difference powers carry the decaying exponent 1/2 - k1 - k2: the
  // kernel pairs against the growing Laguerre function of the same argument,
  // and the product stays bounded. Fixed against the inverse Jacobi transform
  // of the confluent integral representation U(a;b;z) =
  // z^{c-a}/Gamma(c) int_0^inf e^{-zy} y^{c-1} 2F1(a,1+a-b;c;-y) dy.
  CgConstants c;
  c.c_minus = signL / std::sqrt(2.0 * pi) *
              std::pow(Cplx(x1 - x2), Cplx(0.5 - k1 - k2, -rho)) *
              std::exp(0.5 * (std::lgamma(2.0 * k1) - std::lgamma(2.0 * k2))) *
              g_sum / (gamma_abs(Cplx(k1 - k2 + 0.5, rho)) * g_2irho);
  c.c_zero = signL / std::sqrt(2.0 * pi) *
             std::exp(0.5 * (std::lgamma(2.0 * k1) + std::lgamma(2.0 * k2))) *
             gamma_fn(Cplx(k1 + k2 - 0.5, rho)) /
             (g_sum * gamma_abs(Cplx(k1 - k2 + 0.5, rho)) *
              gamma_fn(Cplx(k2 - k1 + 0.5, -rho)));
  c.c_plus = 1.0 / std::sqrt(2.0 * pi) *
             std::pow(Cplx(x2 - x1), Cplx(0.5 - k1 - k2, rho)) *
             std::exp(0.5 * (std::lgamma(2.0 * k2) - std::lgamma(2.0 * k1))) *
             g_sum / (gamma_abs(Cplx(k2 - k1 + 0.5, rho)) * g_2irho);
  return c;
}

namespace {

// Panelled quadrature over rho in (0, Lambda): the interval [0, 1e-6] is a
// zero-contribution panel (the integrands vanish like rho^2 there), and
// Lambda grows in steps of 5 until the last panel is negligible.
Cplx rho_integral(const std::function<Cplx(double)>& f, double tol) {
  double lo = 1e-6;
  Cplx total = 0.0;
  for (int step = 0; step < 60; ++step) {
    const double hi = 5.0 * (step + 1);
    const Cplx panel = integrate(f, IntegrationDomain::finite(lo, hi), tol).value;
    total += panel;
    if (std::abs(panel) < 1e-9 * (1.0 + std::abs(total))) return total;
    lo = hi;
  }
  throw NonConvergence("rho_integral: tail did not decay", total, INFINITY);
}

}  // namespace

CgNormalizationResult verify_cg_normalization(const TensorParams& tp, double x,
                                              double t, double tol) {
  if (!(x > 0.0) || !(t > 0.0))
    throw std::domain_error("verify_cg_normalization: requires x, t > 0");
  const double k1 = tp.k1, k2 = tp.k2;
  const JacobiParams jp = JacobiParams::make(2.0 * k1 - 1.0, 2.0 * k2 - 1.0);
  const double lg2k1 = std::lgamma(2.0 * k1);
  auto integrand = [&](double rho) -> Cplx {
    const PrincipalParams pp = PrincipalParams::principal(rho, tp.eps);
    const Cplx psi = laguerre_function(-tp.L, t, pp).scalar;
    const double ratio =
        gamma_abs(Cplx(k1 + k2 - 0.5, rho)) / gamma_abs(Cplx(0.0, 2.0 * rho));
    return std::exp(x) * jacobi_fn(Cplx(2.0 * rho), jp, x / t) *
           std::exp(Cplx(0.0, rho * std::log(t))) * psi *
           std::exp(std::log(gamma_abs(Cplx(k1 - k2 + 0.5, rho))) - lg2k1) *
           ratio * ratio;
  };
  const double signL = (tp.L % 2 == 0) ? 1.0 : -1.0;
  const Cplx integral = signL * std::pow(t, 0.5 - k1 - k2) / (2.0 * pi) *
                        rho_integral(integrand, tol);
  return {integral, std::abs(integral - 1.0)};
}

ProductFormulaResult verify_product_formula(int n1, int n2, double k1,
                                            double k2, double x1, double x2,
                                            double tol) {
  if (x1 < 0.0 || x2 < 0.0)
    throw std::domain_error("verify_product_formula: requires x1, x2 >= 0");
  Cplx rhs;

  if (x1 != x2) {
    // Pointwise product of two orthonormal Laguerre functions expanded over
    // the continuous dual basis: the coupling constant times the Jacobi
    // function carries the smaller argument, the recurrence eigenfunction
    // psi_m the difference, and the orthonormal dual Hahn polynomial with the
    // half-density ties the two discrete indices together.
    const TensorParams tp = TensorParams::make(k1, k2);
    const int m = n1 - n2 - tp.L;
    const double t = x2 - x1;  // psi argument; sign selects the branch
    const double xmin = std::min(x1, x2);
    const double d = std::abs(t);
    const JacobiParams jp =
        x1 > x2 ? JacobiParams::make(2.0 * k2 - 1.0, 2.0 * k1 - 1.0)
                : JacobiParams::make(2.0 * k1 - 1.0, 2.0 * k2 - 1.0);
    const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
    auto integrand = [&](double rho) -> Cplx {
      const CgConstants cg = cg_constants(tp, rho, x1, x2);
      const Cplx coupling = x1 > x2 ? cg.c_minus : cg.c_plus;
      const DecompCoefficient dc = decomp_coefficient(tp, n1, n2, rho * rho);
      const PrincipalParams pp = PrincipalParams::principal(rho, tp.eps);
      const Cplx psi = laguerre_function(m, t, pp).scalar;
      return coupling * std::exp(xmin) *
             jacobi_fn(Cplx(2.0 * rho), jp, xmin / d) * dc.coefficient *
             dc.density_factor * sign_m * psi;
    };
    rhs = rho_integral(integrand, tol);
  } else {
    if (!(x1 > 0.0))
      throw std::domain_error(
          "verify_product_formula: equal arguments must be positive");
    // Symmetric in (k1,n1) <-> (k2,n2); the kernel form below needs n2 >= n1.
    double K1 = k1, K2 = k2;
    int N1 = n1, N2 = n2;
    if (N2 < N1) {
      std::swap(K1, K2);
      std::swap(N1, N2);
    }
    const TensorParams tp = TensorParams::make(K1, K2);
    const int m = N1 - N2 - tp.L;
    const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
    const double x = x1;
    const double xpow = std::exp(x) * std::pow(x, 0.5 - K1 - K2);
    const double lx = std::log(x);
    auto integrand = [&](double rho) -> Cplx {
      // c_zero pairs against the second component of the lattice
      // eigenfunction value at zero; the constant is argument-free.
      const Cplx c0 = cg_constants(tp, rho, 2.0, 1.0).c_zero;
      const DecompCoefficient dc = decomp_coefficient(tp, N1, N2, rho * rho);
      const PrincipalParams pp = PrincipalParams::principal(rho, tp.eps);
      const LaguerreFunctionValue lf = laguerre_function(m, 0.0, pp);
      const double osc =
          2.0 * (c0 * std::exp(Cplx(0.0, -rho * lx)) * lf.pair[1]).real();
      return dc.coefficient * dc.density_factor * sign_m * xpow * osc;
    };
    rhs = rho_integral(integrand, tol);
  }

  const double lhs = laguerre_orthonormal(n1, 2.0 * k1 - 1.0, x1) *
                     laguerre_orthonormal(n2, 2.0 * k2 - 1.0, x2);
  ProductFormulaResult out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.absolute_mode = std::abs(lhs) < 1e-8 * (1.0 + std::abs(rhs));
  out.residual = out.absolute_mode ? std::abs(rhs - lhs)
                                   : std::abs(rhs - lhs) / std::abs(lhs);
  return out;
}

double cg_recurrence_residual(const TensorParams& tp, double rho, int n1,
                              int n2) {
  const double k1 = tp.k1, k2 = tp.k2;
  const double y = rho * rho;
  auto g = [&](int a, int b) {
    return decomp_coefficient(tp, a, b, y).coefficient;
  };
  const double g0 = g(n1, n2);
  const double diag =
      (k1 * (1.0 - k1) + k2 * (1.0 - k2) + 2.0 * (k1 + n1) * (k2 + n2)) * g0;
  const double p_up = std::sqrt((n1 + 1.0) * (2.0 * k1 + n1) * (n2 + 1.0) *
                                (2.0 * k2 + n2));
  const double up = p_up * g(n1 + 1, n2 + 1);
  double down = 0.0;
  if (n1 > 0 && n2 > 0) {
    const double p_dn = std::sqrt(n1 * (2.0 * k1 + n1 - 1.0) * n2 *
                                  (2.0 * k2 + n2 - 1.0));
    down = p_dn * g(n1 - 1, n2 - 1);
  }
  const double rhs = (rho * rho + 0.25) * g0;
  const double scale = std::max(
      {std::abs(diag), std::abs(up), std::abs(down), std::abs(rhs), 1.0});
  return std::abs(diag - up - down - rhs) / scale;
}

}  // namespace lagfun
