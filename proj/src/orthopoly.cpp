#include "lagfun/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

#include "lagfun/gamma.hpp"
#include "lagfun/quadrature.hpp"

namespace lagfun {

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
  if (n == 0) return 1.0;
  double lm = 1.0;
  double l = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    double lp = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm) / (k + 1.0);
    lm = l;
    l = lp;
  }
  return l;
}

double laguerre_orthonormal(int n, double alpha, double x) {
  double norm = 1.0;
  for (int j = 1; j <= n; ++j) norm *= j / (alpha + j);
  return std::sqrt(norm) * laguerre(n, alpha, x);
}

double laguerre_weight(double alpha, double x) {
  if (x < 0.0) return 0.0;
  if (x == 0.0) return alpha > 0.0 ? 0.0 : (alpha == 0.0 ? 1.0 : INFINITY);
  return std::exp(alpha * std::log(x) - x - std::lgamma(alpha + 1.0));
}

namespace {

double poch(double a, int n) {
  double p = 1.0;
  for (int j = 0; j < n; ++j) p *= a + j;
  return p;
}

// Terminating 3F2 form; every term is real because the conjugate pair
// (a+ix)_m (a-ix)_m collapses to prod_j ((a+j)^2 + y).
double cdh_series(int n, double y, double a, double b, double c) {
  double sum = 0.0, term = 1.0;
  for (int m = 0; m <= n; ++m) {
    sum += term;
    term *= double(m - n) * ((a + m) * (a + m) + y) /
            ((a + b + m) * (a + c + m) * (m + 1.0));
  }
  return poch(a + b, n) * poch(a + c, n) * sum;
}

}  // namespace

double cdh(int n, double y, double a, double b, double c) {
  if (n < 0) throw std::invalid_argument("cdh: n must be >= 0");
  if (n <= 12) return cdh_series(n, y, a, b, c);
  double sm = cdh_series(11, y, a, b, c);
  double s = cdh_series(12, y, a, b, c);
  for (int k = 12; k < n; ++k) {
    double A = (k + a + b) * (k + a + c);
    double C = k * (k + b + c - 1.0);
    double sp = (A + C - (a * a + y)) * s -
                C * (k - 1.0 + a + b) * (k - 1.0 + a + c) * sm;
    sm = s;
    s = sp;
  }
  return s;
}

CdhParams CdhParams::make(double a, double b, double c) {
  if (!(a + b > 0.0 && a + c > 0.0 && b + c > 0.0))
    throw std::invalid_argument("CdhParams: pairwise sums must be positive");
  int smallest = 0;
  if (b < a && b <= c) smallest = 1;
  if (c < a && c < b) smallest = 2;
  return CdhParams{a, b, c, smallest};
}

double CdhParams::smallest_value() const {
  return smallest == 0 ? a : (smallest == 1 ? b : c);
}

CdhParams CdhParams::canonical() const {
  if (smallest == 0) return *this;
  if (smallest == 1) return CdhParams{b, a, c, 0};
  return CdhParams{c, a, b, 0};
}

double cdh_orthonormal(int n, double y, const CdhParams& p) {
  double h = 1.0;
  for (int j = 1; j <= n; ++j) h *= j;
  h *= poch(p.a + p.b, n) * poch(p.a + p.c, n) * poch(p.b + p.c, n);
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * cdh(n, y, p.a, p.b, p.c) / std::sqrt(h);
}

CdhMeasure cdh_measure(const CdhParams& params) {
  const CdhParams p = params.canonical();
  const double a = p.a, b = p.b, c = p.c;
  const double norm =
      std::exp(std::lgamma(a + b) + std::lgamma(a + c) + std::lgamma(b + c));

  CdhMeasure m;
  m.density = [a, b, c, norm](double x) -> double {
    if (x < 0.0) return 0.0;
    if (x == 0.0) {
      // |Gamma(a+ix)/Gamma(2ix)|^2 -> 4 when a = 0, -> 0 when a > 0.
      if (a != 0.0) return 0.0;
      return 2.0 / pi * std::exp(2.0 * std::lgamma(b) + 2.0 * std::lgamma(c)) /
             norm;
    }
    double ln = 2.0 * (std::real(lngamma(Cplx(a, x))) +
                       std::real(lngamma(Cplx(b, x))) +
                       std::real(lngamma(Cplx(c, x))) -
                       std::real(lngamma(Cplx(0.0, 2.0 * x))));
    return std::exp(ln) / (2.0 * pi * norm);
  };

  if (a < 0.0) {
    const double N = std::exp(std::lgamma(b - a) + std::lgamma(c - a) -
                              std::lgamma(-2.0 * a) - std::lgamma(b + c));
    for (int k = 0; a + k < 0.0; ++k) {
      double w = N * poch(2.0 * a, k) * poch(a + 1.0, k) * poch(a + b, k) *
                 poch(a + c, k) /
                 (poch(a, k) * poch(a - b + 1.0, k) * poch(a - c + 1.0, k) *
                  poch(1.0, k));
      if (k % 2 == 1) w = -w;
      m.masses.push_back({-(a + k) * (a + k), w});
    }
  }
  return m;
}

double cdh_integrate(const CdhMeasure& m, const std::function<double(double)>& f,
                     double tol) {
  auto g = [&](double x) -> Cplx { return m.density(x) * f(x * x); };
  double total =
      std::real(integrate(g, IntegrationDomain::half_line(0.0), tol).value);
  for (const auto& mass : m.masses) total += mass.weight * f(mass.y);
  return total;
}

DecompCdhResult decomp_cdh(int n, double y, int p, double k1, double k2) {
  if (!(k1 + k2 >= 0.5 && std::abs(k1 - k2) <= 0.5))
    throw std::invalid_argument(
        "decomp_cdh: requires k1+k2 >= 1/2 and |k1-k2| <= 1/2");
  CdhParams params =
      p >= 0 ? CdhParams::make(k2 - k1 + 0.5, k1 + k2 - 0.5, k1 - k2 + p + 0.5)
             : CdhParams::make(k1 - k2 + 0.5, k1 + k2 - 0.5, k2 - k1 - p + 0.5);
  DecompCdhResult r;
  r.value = cdh_orthonormal(n, y, params);
  r.params = params;
  r.measure = cdh_measure(params);
  return r;
}

}  // namespace lagfun
