#include "lagfun/jacobi_function.hpp"

#include <cmath>
#include <stdexcept>

#include "lagfun/gamma.hpp"
#include "lagfun/hypergeometric.hpp"
#include "lagfun/quadrature.hpp"

namespace lagfun {

JacobiParams JacobiParams::make(double alpha, double beta) {
  if (!(alpha > -1.0))
    throw std::invalid_argument("JacobiParams: alpha must be > -1");
  return JacobiParams{alpha, beta};
}

namespace {

struct AB {
  Cplx a, b, c;
};

AB gauss_params(Cplx lambda, const JacobiParams& p) {
  Cplx s = p.alpha + p.beta + 1.0;
  return {0.5 * (s - Cplx(0, 1) * lambda), 0.5 * (s + Cplx(0, 1) * lambda),
          Cplx(p.alpha + 1.0)};
}

Cplx series_value(const AB& ab, double x) {
  return hyp2f1_neg(ab.a, ab.b, ab.c, -x);
}

Cplx series_derivative(const AB& ab, double x) {
  // d/dx 2F1(a,b;c;-x) = -(ab/c) 2F1(a+1,b+1;c+1;-x)
  return -(ab.a * ab.b / ab.c) *
         hyp2f1_neg(ab.a + 1.0, ab.b + 1.0, ab.c + 1.0, -x);
}

// Taylor-series continuation of the hypergeometric ODE
//   x(1+x) y'' + [alpha+1+(alpha+beta+2)x] y' + ((alpha+beta+1)^2+lambda^2)/4 y = 0
// from x0 (value, derivative known) to x_target.
void ode_continue(const JacobiParams& p, Cplx lambda, double x0, double x_target,
                  Cplx& y, Cplx& dy) {
  const double q1 = p.alpha + p.beta + 2.0;
  const Cplx s1 = p.alpha + p.beta + 1.0;
  const Cplx R = 0.25 * (s1 * s1 + lambda * lambda);
  const double omega_scale = std::abs(lambda.real());
  double x = x0;
  while (x < x_target) {
    const double P0 = x * (1.0 + x);
    const double P1 = 1.0 + 2.0 * x;
    const double Q0 = p.alpha + 1.0 + q1 * x;
    const double omega = omega_scale / (2.0 * std::sqrt(P0));
    double h = std::min(0.6 * x, x_target - x);
    if (omega > 0.0) h = std::min(h, 8.0 / omega);

    // Recurrence for Taylor coefficients around x.
    constexpr int kMax = 130;
    Cplx c0 = y, c1 = dy;
    Cplx val = c0 + c1 * h;
    Cplx der = c1;
    double hp = h;  // h^n for the value sum, current n = 1
    double scale = std::abs(c0) + std::abs(c1) * h;
    bool converged = false;
    for (int n = 0; n <= kMax; ++n) {
      Cplx c2 = -((P1 * double(n + 1) * double(n) + Q0 * double(n + 1)) * c1 +
                  (double(n) * double(n - 1) + q1 * double(n) + R) * c0) /
                (P0 * double(n + 2) * double(n + 1));
      hp *= h;
      Cplx term = c2 * hp;
      val += term;
      der += c2 * double(n + 2) * hp / h;
      scale = std::max(scale, std::abs(val));
      if (std::abs(term) < 1e-18 * scale &&
          std::abs(c1 * hp / h) < 1e-18 * scale && n > 4) {
        converged = true;
        break;
      }
      c0 = c1;
      c1 = c2;
    }
    if (!converged)
      throw NonConvergence("jacobi_fn: Taylor step did not converge", val, 0.0);
    y = val;
    dy = der;
    x += h;
  }
}

}  // namespace

Cplx jacobi_fn(Cplx lambda, const JacobiParams& p, double x) {
  if (x < 0.0) throw std::domain_error("jacobi_fn: requires x >= 0");
  if (x == 0.0) return 1.0;
  const AB ab = gauss_params(lambda, p);
  // The direct/Pfaff series loses roughly exp(|Re lambda| * 2 sqrt(x)) digits
  // to cancellation; beyond that budget switch to ODE continuation.
  const double lam = std::abs(lambda.real());
  const double budget = 14.0;
  if (2.0 * lam * std::sqrt(x) <= budget) return series_value(ab, x);
  const double x0 = std::pow(0.5 * budget / lam, 2);
  Cplx y = series_value(ab, x0);
  Cplx dy = series_derivative(ab, x0);
  ode_continue(p, lambda, x0, x, y, dy);
  return y;
}

double jacobi_weight(const JacobiParams& p, double x) {
  if (x < 0.0) throw std::domain_error("jacobi_weight: requires x >= 0");
  if (x == 0.0) return p.alpha > 0.0 ? 0.0
                                     : (p.alpha == 0.0
                                            ? std::exp2(2.0 * p.alpha + 2.0 * p.beta + 1.0)
                                            : INFINITY);
  return std::exp((2.0 * p.alpha + 2.0 * p.beta + 1.0) * std::log(2.0) +
                  p.alpha * std::log(x) + p.beta * std::log1p(x));
}

Cplx c_function(Cplx lambda, const JacobiParams& p) {
  if (lambda == Cplx(0.0)) throw PoleError("c_function: pole at lambda = 0");
  const Cplx il = Cplx(0, 1) * lambda;
  const Cplx lognum = (p.alpha + p.beta + 1.0 - il) * std::log(2.0) +
                      lngamma(Cplx(p.alpha + 1.0)) + lngamma(il);
  const Cplx logden = lngamma(0.5 * (p.alpha + p.beta + 1.0 + il)) +
                      lngamma(0.5 * (p.alpha - p.beta + 1.0 + il));
  return std::exp(lognum - logden);
}

PlancherelMeasure plancherel(const JacobiParams& p) {
  PlancherelMeasure m;
  JacobiParams pc = p;
  m.density = [pc](double lam) -> double {
    if (lam <= 0.0) return 0.0;
    Cplx c = c_function(Cplx(lam, 0.0), pc);
    return 1.0 / std::norm(c);
  };
  for (int j = 0;; ++j) {
    double s = std::abs(p.beta) - p.alpha - 1.0 - 2.0 * j;
    if (s <= 0.0) break;
    Cplx lam(0.0, s);
    // Residue of (c(mu) c(-mu))^{-1} at mu = lam by a small contour.
    const double r = 1e-3;
    const int npts = 64;
    Cplx res = 0.0;
    for (int q = 0; q < npts; ++q) {
      double th = 2.0 * pi * q / npts;
      Cplx e(std::cos(th), std::sin(th));
      Cplx mu = lam + r * e;
      res += r * e / (c_function(mu, p) * c_function(-mu, p));
    }
    res /= double(npts);
    Cplx w = Cplx(0, -1) * res;
    m.points.push_back({lam, w.real()});
  }
  return m;
}

SampledTransform jacobi_transform(const std::function<double(double)>& f,
                                  const JacobiParams& p,
                                  const std::vector<double>& grid, double tol) {
  if (grid.empty()) throw std::invalid_argument("jacobi_transform: empty grid");
  SampledTransform out;
  out.grid = grid;
  auto one = [&](Cplx lambda) -> Cplx {
    auto integrand = [&](double x) -> Cplx {
      return f(x) * jacobi_fn(lambda, p, x) * jacobi_weight(p, x);
    };
    return integrate(integrand, IntegrationDomain::half_line(0.0), tol).value;
  };
  for (double lam : grid) out.values.push_back(one(Cplx(lam, 0.0)));
  for (const auto& pt : plancherel(p).points)
    out.discrete_values.push_back(one(pt.lambda));
  return out;
}

Cplx jacobi_inverse(const SampledTransform& F, const JacobiParams& p, double x) {
  const size_t n = F.grid.size();
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument(
        "jacobi_inverse: need an odd number of grid points (Simpson)");
  const double h = F.grid[1] - F.grid[0];
  PlancherelMeasure m = plancherel(p);
  auto g = [&](size_t i) -> Cplx {
    double lam = F.grid[i];
    if (lam == 0.0) return 0.0;  // density vanishes like lam^2
    return F.values[i] * jacobi_fn(Cplx(lam, 0.0), p, x) * m.density(lam);
  };
  Cplx sum = g(0) + g(n - 1);
  for (size_t i = 1; i + 1 < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * g(i);
  Cplx result = sum * h / 3.0 / (2.0 * pi);
  for (size_t j = 0; j < m.points.size(); ++j)
    result += m.points[j].weight * F.discrete_values[j] *
              jacobi_fn(m.points[j].lambda, p, x);
  return result;
}

}  // namespace lagfun
