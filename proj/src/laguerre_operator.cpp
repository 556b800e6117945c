#include "lagfun/laguerre_operator.hpp"

#include <algorithm>
#include <cmath>

#include "lagfun/gamma.hpp"
#include "lagfun/hypergeometric.hpp"
#include "lagfun/quadrature.hpp"

namespace lagfun {

PrincipalParams PrincipalParams::principal(double rho, double eps) {
  if (!(rho >= 0.0) || !(eps >= 0.0 && eps < 1.0))
    throw std::invalid_argument("PrincipalParams: need rho >= 0, eps in [0,1)");
  if (rho == 0.0 && eps == 0.5)
    throw std::invalid_argument("PrincipalParams: (rho,eps) = (0,1/2) excluded");
  return PrincipalParams{rho, eps, false, 0.0};
}

PrincipalParams PrincipalParams::complementary(double lambda, double eps) {
  bool ok = (eps >= 0.0 && eps < 0.5 && lambda > -0.5 && lambda < -eps) ||
            (eps > 0.5 && eps < 1.0 && lambda > -0.5 && lambda < eps - 1.0);
  if (!ok)
    throw std::invalid_argument(
        "PrincipalParams: complementary needs lambda in (-1/2,-eps) for "
        "eps in [0,1/2), or (-1/2,eps-1) for eps in (1/2,1)");
  return PrincipalParams{0.0, eps, true, lambda};
}

Cplx PrincipalParams::mu() const {
  return complementary_mode ? Cplx(lambda + 0.5, 0.0) : Cplx(0.0, rho);
}

double coeff_a(const PrincipalParams& p, int k) {
  Cplx w = double(k) + p.eps + 0.5 + p.mu();
  Cplx wc = double(k) + p.eps + 0.5 - p.mu();
  return std::sqrt((w * wc).real());
}

double coeff_b(const PrincipalParams& p, int k) { return 2.0 * (k + p.eps); }

Cplx gamma_abs_sym(const PrincipalParams& p, Cplx f) {
  return std::exp(0.5 * (lngamma(f + p.mu()) + lngamma(f - p.mu())));
}

namespace {

Cplx sinpi(Cplx z) { return std::exp(lnsinpi(z)); }

}  // namespace

Cplx sinpi_abs_sym(const PrincipalParams& p) {
  Cplx c = p.eps + 0.5;
  return std::sqrt(sinpi(c + p.mu()) * sinpi(c - p.mu()));
}

Cplx solution(Family fam, const PrincipalParams& p, Cplx z, int k) {
  const Cplx mu = p.mu();
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  switch (fam) {
    case Family::s: {
      Cplx f = double(k) + p.eps + 0.5;
      Cplx pref = std::exp(0.5 * (lngamma(f + mu) - lngamma(f - mu)));
      return sign * pref * hyp1f1(f + mu, 1.0 + 2.0 * mu, z);
    }
    case Family::t: {
      Cplx g = 0.5 - double(k) - p.eps;
      Cplx pref = std::exp(0.5 * (lngamma(g - mu) - lngamma(g + mu)));
      return pref * hyp1f1(g - mu, 1.0 - 2.0 * mu, -z);
    }
    case Family::u: {
      Cplx f = double(k) + p.eps + 0.5;
      return sign * gamma_abs_sym(p, f) * hypU(f + mu, 1.0 + 2.0 * mu, z);
    }
    case Family::v: {
      Cplx g = 0.5 - double(k) - p.eps;
      return gamma_abs_sym(p, g) * hypU(g - mu, 1.0 - 2.0 * mu, -z);
    }
  }
  throw std::logic_error("solution: unknown family");
}

ConnectionCoefficients connection(const PrincipalParams& p, Cplx z) {
  if (z.imag() == 0.0)
    throw BranchCutError("connection: requires Im z != 0");
  const Cplx mu = p.mu();
  if (mu == Cplx(0.0))
    throw PoleError("connection: Gamma(+-2 mu) poles at mu = 0");
  const Cplx c = p.eps + 0.5;
  const Cplx sabs = sinpi_abs_sym(p);
  const Cplx ratio = sinpi(c + mu) / sabs;
  const Cplx zm = std::exp(-2.0 * mu * std::log(z));        // z^{-2 mu}
  const Cplx nzp = std::exp(2.0 * mu * std::log(-z));       // (-z)^{2 mu}
  const int xi = z.imag() > 0.0 ? 1 : -1;
  const Cplx ephase = std::exp(Cplx(0.0, pi * xi) * (c + mu));

  ConnectionCoefficients cc;
  cc.xi = xi;
  cc.A = gamma_fn(-2.0 * mu);
  cc.B = zm * std::exp(z) * gamma_fn(2.0 * mu) * ratio;
  cc.C = nzp * std::exp(-z) * gamma_fn(-2.0 * mu) * ratio;
  cc.D = gamma_fn(2.0 * mu);
  cc.E = sinpi(c - mu) * gamma_fn(1.0 + 2.0 * mu) * ephase / pi;
  cc.F = -sabs * gamma_fn(1.0 + 2.0 * mu) * std::exp(z) * zm * ephase / pi;
  cc.G = sabs * gamma_fn(1.0 - 2.0 * mu) * std::exp(-z) * nzp * ephase / pi;
  cc.H = -sinpi(c - mu) * gamma_fn(1.0 - 2.0 * mu) * ephase / pi;
  return cc;
}

Cplx wronskian(Family f, Family g, const PrincipalParams& p, Cplx z, int k) {
  Cplx fk = solution(f, p, z, k), fk1 = solution(f, p, z, k + 1);
  Cplx gk = solution(g, p, z, k), gk1 = solution(g, p, z, k + 1);
  return coeff_a(p, k) * (fk * gk1 - fk1 * gk);
}

Cplx wronskian_phi_Phi(const PrincipalParams& p, Cplx z) {
  if (z.imag() == 0.0)
    throw BranchCutError("wronskian_phi_Phi: requires 0 < |arg z| < pi");
  // Sign fixed by the verified connection coefficients: [phi,Phi] =
  // z^{mu}(-z)^{-mu}[u,v] with [u,v] = -[s,u]/F = +pi e^{-i pi xi(eps+1/2+mu)}
  // / |sin pi(eps+1/2+mu)|.
  const int xi = z.imag() > 0.0 ? 1 : -1;
  const Cplx c = p.eps + 0.5;
  return pi * std::exp(Cplx(0.0, -pi * xi) * c) / sinpi_abs_sym(p);
}

LaguerreFunctionValue laguerre_function(int n, double x, const PrincipalParams& p) {
  LaguerreFunctionValue val;
  if (x > 0.0) {
    val.scalar = solution(Family::u, p, Cplx(x, 0.0), n);
  } else if (x < 0.0) {
    val.scalar = solution(Family::v, p, Cplx(x, 0.0), n);
  } else {
    const Cplx mu = p.mu();
    if (mu == Cplx(0.0))
      throw PoleError("laguerre_function: x = 0 needs rho > 0");
    val.at_zero = true;
    Cplx gabs = std::exp(0.5 * (lngamma(2.0 * mu) + lngamma(-2.0 * mu)));
    Cplx t0 = solution(Family::t, p, Cplx(0.0, 0.0), n);
    val.pair[0] = gabs * std::conj(t0);
    val.pair[1] = gabs * t0;
  }
  return val;
}

double spectral_weight(double x, const PrincipalParams& p) {
  Cplx s2 = sinpi_abs_sym(p);
  return (s2 * s2).real() * std::exp(-std::abs(x)) / (pi * pi);
}

namespace {

std::vector<int> support_union(const SparseVec& f, const SparseVec& g) {
  std::vector<int> idx;
  for (const auto& [k, v] : f) idx.push_back(k);
  for (const auto& [k, v] : g) idx.push_back(k);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

Cplx at(const SparseVec& f, int k) {
  auto it = f.find(k);
  return it == f.end() ? Cplx(0.0) : it->second;
}

}  // namespace

Cplx resolvent_element(const PrincipalParams& p, Cplx z, const SparseVec& f,
                       const SparseVec& g) {
  if (z.imag() == 0.0)
    throw BranchCutError("resolvent_element: requires Im z != 0");
  const Cplx mu = p.mu();
  const std::vector<int> idx = support_union(f, g);
  const Cplx zp = std::exp(mu * std::log(z));         // z^{i rho}
  const Cplx nzm = std::exp(-mu * std::log(-z));      // (-z)^{-i rho}
  std::map<int, Cplx> phi, Phi;
  for (int k : idx) {
    phi[k] = zp * solution(Family::u, p, z, k);
    Phi[k] = nzm * solution(Family::v, p, z, k);
  }
  Cplx sum = 0.0;
  for (int k : idx) {
    for (int l : idx) {
      if (k > l) continue;
      Cplx pair = at(f, l) * std::conj(at(g, k)) + at(f, k) * std::conj(at(g, l));
      if (pair == Cplx(0.0)) continue;
      double half = (k == l) ? 0.5 : 1.0;
      sum += Phi[k] * phi[l] * pair * half;
    }
  }
  return sum / wronskian_phi_Phi(p, z);
}

Cplx finite_section_resolvent(const PrincipalParams& p, Cplx z,
                              const SparseVec& f, const SparseVec& g, int N) {
  if (z.imag() == 0.0)
    throw BranchCutError("finite_section_resolvent: requires Im z != 0");
  const int dim = 2 * N + 1;
  // Solve (-T - z) x = f for the centered section T of L, by the Thomas
  // algorithm; the matrix is tridiagonal with diagonal -b_k - z.
  std::vector<Cplx> diag(dim), rhs(dim, 0.0);
  std::vector<double> off(dim - 1);
  for (int i = 0; i < dim; ++i) {
    int k = i - N;
    diag[i] = -coeff_b(p, k) - z;
    rhs[i] = at(f, k);
  }
  for (int i = 0; i + 1 < dim; ++i) off[i] = -coeff_a(p, i - N);
  std::vector<Cplx> cp(dim - 1);
  cp[0] = off[0] / diag[0];
  rhs[0] /= diag[0];
  for (int i = 1; i < dim; ++i) {
    Cplx m = diag[i] - off[i - 1] * cp[i - 1];
    if (i < dim - 1) cp[i] = off[i] / m;
    rhs[i] = (rhs[i] - off[i - 1] * rhs[i - 1]) / m;
  }
  for (int i = dim - 2; i >= 0; --i) rhs[i] -= cp[i] * rhs[i + 1];
  Cplx out = 0.0;
  for (const auto& [k, gv] : g)
    if (k >= -N && k <= N) out += rhs[k + N] * std::conj(gv);
  return out;
}

namespace {

// Recurrence steps shared by the row evaluation and asymptotic_check below.
Cplx row_step_up(const PrincipalParams& p, Cplx z, int k, Cplx fkm, Cplx fk) {
  return -((coeff_b(p, k) + z) * fk + coeff_a(p, k - 1) * fkm) / coeff_a(p, k);
}
Cplx row_step_down(const PrincipalParams& p, Cplx z, int k, Cplx fkp, Cplx fk) {
  return -(coeff_a(p, k) * fkp + (coeff_b(p, k) + z) * fk) / coeff_a(p, k - 1);
}

// Integrand vector of the spectral density on one half-line, shared by
// spectral_projection and the Gram computation. The direct two-term U
// evaluation cancels catastrophically on the growing side of the lattice
// (indices with large positive real parameter) already for moderate real
// arguments, so the row is built by the anchored minimal-solution recurrence:
// u is minimal as k -> +infinity and v as k -> -infinity, so a downward
// (resp. upward) pass started well beyond the requested window reproduces the
// row up to one constant, which is fixed at an anchor index chosen far enough
// on the decaying side that the direct or asymptotic evaluation is reliable.
std::vector<Cplx> density_products(const PrincipalParams& p, double x,
                                   const std::vector<int>& idx) {
  // Beyond |x| ~ 600 the e^{-|x|} spectral weight drives every density
  // integrand below 1e-200 while the U evaluation overflows, so the tail is
  // truncated to zero.
  if (std::abs(x) > 600.0) return std::vector<Cplx>(idx.size(), 0.0);
  const double ax = std::abs(x);
  const Family fam = x > 0.0 ? Family::u : Family::v;
  std::vector<Cplx> vals(idx.size());
  if (ax < 0.5) {
    for (size_t i = 0; i < idx.size(); ++i)
      vals[i] = solution(fam, p, Cplx(x, 0.0), idx[i]);
    return vals;
  }
  const Cplx z(x, 0.0);
  const bool up = fam == Family::v;  // recurrence direction of the stable pass
  // Signed coordinate m increases in the stable direction; the lattice index
  // is k = m for u (downward pass flips below) and k = -m for v.
  const int m_lo = up ? -idx.back() : idx.front();
  const int m_hi = up ? -idx.front() : idx.back();
  // Anchor on the decaying side: push the confluent parameter's real part
  // negative enough that the direct evaluation stays clean for ax < 25, while
  // capping the depth so the asymptotic expansion that takes over beyond
  // keeps its parameters small against the argument. The anchor only has to
  // be visited by the pass, not bound the window.
  const int m_anchor = -2 - int(std::min(ax, 25.0) / 8.0);
  const int m_end = std::min(m_anchor, m_lo);
  Cplx anchor0 = solution(fam, p, z, up ? -m_anchor : m_anchor);
  Cplx anchor1 = solution(fam, p, z, up ? -(m_anchor - 1) : m_anchor - 1);
  // Start the trial solution far enough beyond the window that the admixture
  // of the dominant solution decays below roundoff over the run-in.
  const double run_in = std::sqrt(std::max(m_hi, 0) + 1.0) + 10.0 / std::sqrt(ax);
  const int m_start = int(std::ceil(run_in * run_in)) + 10;
  Cplx prev = 0.0, cur = 1.0;
  Cplx f_anchor0 = 0.0, f_anchor1 = 0.0;
  // idx is sorted ascending; the pass visits k descending for u, ascending
  // for v. pos tracks the next idx slot to fill in visit order.
  size_t pos = up ? 0 : idx.size();
  for (int m = m_start - 1; m >= m_end - 1; --m) {
    Cplx next = up ? row_step_up(p, z, -m - 1, prev, cur)
                   : row_step_down(p, z, m + 1, prev, cur);
    prev = cur;
    cur = next;
    const int k = up ? -m : m;
    if (up) {
      if (pos < idx.size() && idx[pos] == k) vals[pos++] = cur;
    } else {
      if (pos > 0 && idx[pos - 1] == k) vals[--pos] = cur;
    }
    if (m == m_anchor) f_anchor0 = cur;
    if (m == m_anchor - 1) f_anchor1 = cur;
    if (std::abs(cur) > 1e200) {
      prev *= 1e-200;
      cur *= 1e-200;
      f_anchor0 *= 1e-200;
      f_anchor1 *= 1e-200;
      for (Cplx& vv : vals) vv *= 1e-200;
    }
  }
  // Normalize at whichever anchor entry is larger, guarding against a zero.
  const Cplx ratio = std::abs(f_anchor1) > std::abs(f_anchor0)
                         ? anchor1 / f_anchor1
                         : anchor0 / f_anchor0;
  for (Cplx& vv : vals) vv *= ratio;
  return vals;
}

}  // namespace

Cplx spectral_projection(const PrincipalParams& p, const std::vector<Interval>& borel,
                         const SparseVec& f, const SparseVec& g, double tol) {
  const std::vector<int> idx = support_union(f, g);
  auto integrand = [&](double x) -> Cplx {
    std::vector<Cplx> psi = density_products(p, x, idx);
    Cplx fu = 0.0, ug = 0.0;
    for (size_t i = 0; i < idx.size(); ++i) {
      fu += at(f, idx[i]) * std::conj(psi[i]);
      ug += psi[i] * std::conj(at(g, idx[i]));
    }
    return spectral_weight(x, p) * fu * ug;
  };
  Cplx total = 0.0;
  for (const Interval& iv : borel) {
    // Split at 0: the density switches family there.
    for (int side = 0; side < 2; ++side) {
      double lo = side == 0 ? iv.a : std::max(iv.a, 0.0);
      double hi = side == 0 ? std::min(iv.b, 0.0) : iv.b;
      if (!(lo < hi)) continue;
      IntegralEstimate est;
      if (side == 0) {
        auto flipped = [&](double x) { return integrand(-x); };
        if (std::isinf(lo))
          est = integrate(flipped, IntegrationDomain::half_line(-hi), tol);
        else
          est = integrate(flipped, IntegrationDomain::finite(-hi, -lo), tol);
      } else {
        if (std::isinf(hi))
          est = integrate(integrand, IntegrationDomain::half_line(lo), tol);
        else
          est = integrate(integrand, IntegrationDomain::finite(lo, hi), tol);
      }
      total += est.value;
    }
  }
  return total;
}

std::vector<std::vector<Cplx>> laguerre_function_gram(const PrincipalParams& p,
                                                      int n_min, int n_max,
                                                      double tol) {
  const int m = n_max - n_min + 1;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = n_min + i;
  auto make_integrand = [&](double sgn) {
    return [&, sgn](double x) -> std::vector<Cplx> {
      std::vector<Cplx> psi = density_products(p, sgn * x, idx);
      double w = spectral_weight(x, p);
      std::vector<Cplx> out(size_t(m) * m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          out[size_t(i) * m + j] = w * psi[i] * std::conj(psi[j]);
      return out;
    };
  };
  auto pos = integrate_vector(make_integrand(1.0), m * m,
                              IntegrationDomain::half_line(0.0), tol);
  auto neg = integrate_vector(make_integrand(-1.0), m * m,
                              IntegrationDomain::half_line(0.0), tol);
  std::vector<std::vector<Cplx>> gram(m, std::vector<Cplx>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      gram[i][j] = pos.value[size_t(i) * m + j] + neg.value[size_t(i) * m + j];
  return gram;
}

namespace {

// Upward step: f_{k+1} from (f_{k-1}, f_k); downward solves for f_{k-1}.
Cplx step_up(const PrincipalParams& p, Cplx z, int k, Cplx fkm, Cplx fk) {
  return -((coeff_b(p, k) + z) * fk + coeff_a(p, k - 1) * fkm) / coeff_a(p, k);
}
Cplx step_down(const PrincipalParams& p, Cplx z, int k, Cplx fkp, Cplx fk) {
  return -(coeff_a(p, k) * fkp + (coeff_b(p, k) + z) * fk) / coeff_a(p, k - 1);
}

}  // namespace

AsymptoticReport asymptotic_check(Family fam, const PrincipalParams& p, Cplx z,
                                  int k_max) {
  if (z.imag() == 0.0)
    throw BranchCutError("asymptotic_check: requires 0 < |arg z| < pi");
  if (k_max < 2) throw std::invalid_argument("asymptotic_check: k_max >= 2");
  const Cplx mu = p.mu();
  const double kk = k_max;
  const Cplx logz = std::log(z), lognz = std::log(-z);
  const double sign = (k_max % 2 == 0) ? 1.0 : -1.0;
  const double sqpi = std::sqrt(pi);
  const double k14 = std::pow(kk, -0.25);

  Cplx leading, computed;
  switch (fam) {
    case Family::s: {
      leading = sign / (2.0 * sqpi) *
                std::exp(0.5 * z + std::sqrt(4.0 * (kk + p.eps) * z) +
                         (-0.25 - mu) * logz) *
                gamma_fn(1.0 + 2.0 * mu) * k14;
      // s grows toward +infinity: forward recurrence is stable.
      Cplx fm = solution(Family::s, p, z, 0), fk = solution(Family::s, p, z, 1);
      for (int k = 1; k < k_max; ++k) {
        Cplx fp = step_up(p, z, k, fm, fk);
        fm = fk;
        fk = fp;
      }
      computed = fk;
      break;
    }
    case Family::t: {
      leading = 1.0 / (2.0 * sqpi) *
                std::exp(-0.5 * z + std::sqrt(4.0 * (kk - p.eps) * (-z)) +
                         (-0.25 + mu) * lognz) *
                gamma_fn(1.0 - 2.0 * mu) * k14;
      // t grows toward -infinity: downward recurrence is stable.
      Cplx fp = solution(Family::t, p, z, 1), fk = solution(Family::t, p, z, 0);
      for (int k = 0; k > -k_max; --k) {
        Cplx fm = step_down(p, z, k, fp, fk);
        fp = fk;
        fk = fm;
      }
      computed = fk;
      break;
    }
    case Family::u: {
      leading = sign * sqpi *
                std::exp(0.5 * z - std::sqrt(4.0 * (kk + p.eps) * z) +
                         (-0.25 - mu) * logz) *
                k14;
      // u is minimal at +infinity: Miller downward recurrence from a start
      // well beyond k_max, normalized by the directly computed u_0.
      const int start = k_max + 200;
      Cplx fp = 0.0, fk = 1.0, snapshot = 0.0;
      double rescale_log = 0.0;
      for (int k = start; k > 0; --k) {
        Cplx fm = step_down(p, z, k, fp, fk);
        fp = fk;
        fk = fm;
        if (k - 1 == k_max) snapshot = fk, rescale_log = 0.0;
        if (std::abs(fk) > 1e200) {
          fp *= 1e-200;
          fk *= 1e-200;
          rescale_log += std::log(1e200);
        }
      }
      Cplx u0 = solution(Family::u, p, z, 0);
      computed = snapshot * (u0 / fk) * std::exp(-rescale_log);
      break;
    }
    case Family::v: {
      leading = sqpi *
                std::exp(-0.5 * z - std::sqrt(4.0 * (kk - p.eps) * (-z)) +
                         (-0.25 + mu) * lognz) *
                k14;
      // v is minimal at -infinity: Miller upward recurrence.
      const int start = -(k_max + 200);
      Cplx fm = 0.0, fk = 1.0, snapshot = 0.0;
      double rescale_log = 0.0;
      for (int k = start; k < 0; ++k) {
        Cplx fp = step_up(p, z, k, fm, fk);
        fm = fk;
        fk = fp;
        if (k + 1 == -k_max) snapshot = fk, rescale_log = 0.0;
        if (std::abs(fk) > 1e200) {
          fm *= 1e-200;
          fk *= 1e-200;
          rescale_log += std::log(1e200);
        }
      }
      Cplx v0 = solution(Family::v, p, z, 0);
      computed = snapshot * (v0 / fk) * std::exp(-rescale_log);
      break;
    }
  }
  AsymptoticReport rep;
  rep.computed = computed;
  rep.leading = leading;
  rep.deviation = std::abs(computed / leading - 1.0);
  return rep;
}

}  // namespace lagfun
