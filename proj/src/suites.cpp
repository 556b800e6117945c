#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lagfun/coupling.hpp"
#include "lagfun/gamma.hpp"
#include "lagfun/hypergeometric.hpp"
#include "lagfun/jacobi_function.hpp"
#include "lagfun/laguerre_operator.hpp"
#include "lagfun/orthopoly.hpp"
#include "lagfun/quadrature.hpp"
#include "lagfun/report.hpp"
#include "lagfun/su11.hpp"

namespace lagfun {

namespace {

using Inputs = std::map<std::string, std::string>;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt(Cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

double eff_tol(const SweepSpec& spec, double def) {
  return spec.tol > 0.0 ? spec.tol : def;
}

std::vector<double> grid_or(const SweepSpec& spec, const std::string& key,
                            std::vector<double> def) {
  auto it = spec.grids.find(key);
  if (it == spec.grids.end()) return def;
  if (it->second.empty())
    throw std::invalid_argument("run_suite: empty grid for '" + key + "'");
  return it->second;
}

template <class F>
void add(std::vector<VerificationReport>& out, const std::string& suite,
         Inputs inputs, double tol, F&& body) {
  if (!(tol > 0.0)) throw std::invalid_argument("run_suite: tolerance must be > 0");
  VerificationReport r;
  r.suite = suite;
  r.inputs = std::move(inputs);
  r.tolerance = tol;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
    r.status = r.residual <= tol ? VerificationReport::Status::pass
                                 : VerificationReport::Status::fail;
  } catch (const std::exception& e) {
    r.status = VerificationReport::Status::fail;
    r.residual = INFINITY;
    r.skip_reason = e.what();
  }
  r.runtime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  out.push_back(std::move(r));
}

std::vector<Cplx> sampled_z(const SweepSpec& spec, int count) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.3, 1.5);
  std::vector<Cplx> z;
  for (int i = 0; i < count; ++i)
    z.emplace_back(re(rng), (i % 2 == 0 ? 1.0 : -1.0) * im(rng));
  return z;
}

std::vector<PrincipalParams> sampled_params(const SweepSpec& spec) {
  auto rhos = grid_or(spec, "rho", {1.0, 0.6});
  auto epss = grid_or(spec, "eps", {0.25, 0.8});
  std::vector<PrincipalParams> ps;
  for (size_t i = 0; i < std::min(rhos.size(), epss.size()); ++i)
    ps.push_back(PrincipalParams::principal(rhos[i], epss[i]));
  return ps;
}

// ---------------------------------------------------------------- gamma ----

void suite_gamma(const SweepSpec& spec, std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-12);
  for (double y : grid_or(spec, "y", {0.5, 1.0, 2.0, 4.0}))
    add(out, "gamma", {{"identity", "imaginary-axis-modulus"}, {"y", fmt(y)}},
        tol, [&](VerificationReport& r) {
          const double lhs = std::pow(gamma_abs(Cplx(0.0, y)), 2);
          const double rhs = pi / (y * std::sinh(pi * y));
          r.lhs = lhs;
          r.rhs = rhs;
          r.residual = std::abs(lhs - rhs) / std::abs(rhs);
        });
  for (Cplx z : {Cplx(0.3, 0.7), Cplx(-1.2, 0.4), Cplx(2.5, -1.1)})
    add(out, "gamma", {{"identity", "reflection"}, {"z", fmt(z)}}, tol,
        [&](VerificationReport& r) {
          r.lhs = gamma_fn(z) * gamma_fn(1.0 - z);
          r.rhs = pi / std::exp(lnsinpi(z));
          r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
        });
  for (Cplx z : {Cplx(0.4, 0.2), Cplx(1.7, -0.9)})
    add(out, "gamma", {{"identity", "duplication"}, {"z", fmt(z)}}, tol,
        [&](VerificationReport& r) {
          r.lhs = gamma_fn(2.0 * z);
          r.rhs = std::exp((2.0 * z - 1.0) * std::log(2.0)) / std::sqrt(pi) *
                  gamma_fn(z) * gamma_fn(z + 0.5);
          r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
        });
  add(out, "gamma", {{"identity", "pochhammer-ratio"}, {"a", "0.3+0.8i"}}, tol,
      [&](VerificationReport& r) {
        const Cplx a(0.3, 0.8);
        r.lhs = pochhammer(a, 5);
        r.rhs = gamma_fn(a + 5.0) / gamma_fn(a);
        r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
      });
}

// --------------------------------------------------------------- hypfun ----

void suite_hypfun(const SweepSpec& spec,
                  std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-10);
  for (double x : grid_or(spec, "z", {0.5, 2.0, 7.0}))
    add(out, "hypfun", {{"identity", "kummer-u-degree-one"}, {"z", fmt(x)}},
        tol, [&](VerificationReport& r) {
          const Cplx b(0.7, 0.3);
          r.lhs = hypU(Cplx(-1.0), b, Cplx(x));
          r.rhs = Cplx(x) - b;
          r.residual = std::abs(r.lhs - r.rhs) / (1.0 + std::abs(r.rhs));
        });
  for (double x : grid_or(spec, "z", {0.5, 2.0, 7.0}))
    add(out, "hypfun", {{"identity", "kummer-m-exponential"}, {"z", fmt(x)}},
        tol, [&](VerificationReport& r) {
          r.lhs = hyp1f1(Cplx(1.0), Cplx(1.0), Cplx(x));
          r.rhs = std::exp(Cplx(x));
          r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
        });
  add(out, "hypfun", {{"identity", "kummer-transformation"}}, tol,
      [&](VerificationReport& r) {
        const Cplx a(0.8, 1.1), b(1.9, -0.4), z(3.0, 2.0);
        r.lhs = hyp1f1(a, b, z);
        r.rhs = std::exp(z) * hyp1f1(b - a, b, -z);
        r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
      });
  add(out, "hypfun", {{"identity", "u-kummer-relation"}}, tol,
      [&](VerificationReport& r) {
        const Cplx a(0.6, 0.9), b(0.4, 1.3), z(1.7);
        r.lhs = hypU(a, b, z);
        r.rhs = std::pow(z, 1.0 - b) * hypU(a - b + 1.0, 2.0 - b, z);
        r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
      });
  add(out, "hypfun", {{"identity", "gauss-euler-transformation"}}, tol,
      [&](VerificationReport& r) {
        const Cplx a(0.5, 0.8), b(1.2, -0.3), c(2.1);
        const double z = -0.7;
        r.lhs = hyp2f1_neg(a, b, c, z);
        r.rhs = std::pow(Cplx(1.0 - z), c - a - b) *
                hyp2f1_neg(c - a, c - b, c, z);
        r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
      });
  add(out, "hypfun", {{"identity", "gauss-binomial"}, {"z", "-1"}}, tol,
      [&](VerificationReport& r) {
        r.lhs = hyp2f1_neg(Cplx(1.0), Cplx(2.0), Cplx(2.0), -1.0);
        r.rhs = 0.5;
        r.residual = std::abs(r.lhs - r.rhs);
      });
}

// -------------------------------------------------------- laguerre-ortho ----

void suite_laguerre_ortho(const SweepSpec& spec,
                          std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-10);
  const int nmax = 20;
  for (double alpha : grid_or(spec, "alpha", {0.3, 1.0, 2.5}))
    add(out, "laguerre-ortho", {{"alpha", fmt(alpha)}, {"nmax", fmt(nmax)}},
        tol, [&](VerificationReport& r) {
          const QuadratureRule rule = gauss_laguerre(64, alpha);
          const double norm = std::tgamma(alpha + 1.0);
          std::vector<std::vector<double>> vals(nmax + 1);
          for (int n = 0; n <= nmax; ++n)
            for (double x : rule.nodes)
              vals[n].push_back(laguerre_orthonormal(n, alpha, x));
          double worst = 0.0;
          Cplx wl = 0.0, wr = 0.0;
          for (int n = 0; n <= nmax; ++n)
            for (int m = n; m <= nmax; ++m) {
              double g = 0.0;
              for (size_t i = 0; i < rule.nodes.size(); ++i)
                g += rule.weights[i] * vals[n][i] * vals[m][i];
              g /= norm;
              const double target = n == m ? 1.0 : 0.0;
              if (std::abs(g - target) > worst) {
                worst = std::abs(g - target);
                wl = g;
                wr = target;
              }
            }
          r.lhs = wl;
          r.rhs = wr;
          r.residual = worst;
        });
}

// ------------------------------------------------------------- cdh-ortho ----

void suite_cdh_ortho(const SweepSpec& spec,
                     std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-8);
  struct Triple {
    double a, b, c;
  };
  const std::vector<Triple> triples = {
      {0.5, 1.0, 1.5}, {0.3, 0.7, 1.2}, {-0.3, 0.8, 1.1}, {0.0, 0.9, 1.4}};
  const int nmax = 10;
  for (const Triple& t : triples) {
    Inputs in{{"a", fmt(t.a)}, {"b", fmt(t.b)}, {"c", fmt(t.c)}};
    add(out, "cdh-ortho", in, tol, [&](VerificationReport& r) {
      const CdhParams params = CdhParams::make(t.a, t.b, t.c);
      const CdhMeasure m = cdh_measure(params);
      double worst = 0.0;
      Cplx wl = 0.0, wr = 0.0;
      for (int n = 0; n <= nmax; ++n)
        for (int k = n; k <= nmax; ++k) {
          const double g = cdh_integrate(
              m,
              [&](double y) {
                return cdh_orthonormal(n, y, params) *
                       cdh_orthonormal(k, y, params);
              },
              1e-11);
          const double target = n == k ? 1.0 : 0.0;
          if (std::abs(g - target) > worst) {
            worst = std::abs(g - target);
            wl = g;
            wr = target;
          }
        }
      r.lhs = wl;
      r.rhs = wr;
      r.residual = worst;
    });
    in["check"] = "total-mass";
    add(out, "cdh-ortho", in, tol, [&](VerificationReport& r) {
      const CdhMeasure m = cdh_measure(CdhParams::make(t.a, t.b, t.c));
      r.lhs = cdh_integrate(m, [](double) { return 1.0; }, 1e-11);
      r.rhs = 1.0;
      r.residual = std::abs(r.lhs - r.rhs);
    });
  }
}

// ----------------------------------------------------------- operator-eig ----

const char* family_name(Family f) {
  switch (f) {
    case Family::s: return "s";
    case Family::t: return "t";
    case Family::u: return "u";
    default: return "v";
  }
}

void suite_operator_eig(const SweepSpec& spec,
                        std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-8);
  for (const PrincipalParams& p : sampled_params(spec))
    for (Cplx z : sampled_z(spec, 6))
      for (Family fam : {Family::s, Family::t, Family::u, Family::v})
        add(out, "operator-eig",
            {{"rho", fmt(p.rho)},
             {"eps", fmt(p.eps)},
             {"z", fmt(z)},
             {"family", family_name(fam)}},
            tol, [&](VerificationReport& r) {
              // Residual in the sup norm over the window, relative to the
              // largest term magnitude in the window (family values span
              // many orders of magnitude across k).
              double worst = 0.0, scale = 1e-300;
              for (int k = -15; k <= 15; ++k) {
                const Cplx fm = solution(fam, p, z, k - 1);
                const Cplx f0 = solution(fam, p, z, k);
                const Cplx fp = solution(fam, p, z, k + 1);
                const Cplx t1 = coeff_a(p, k) * fp;
                const Cplx t2 = (coeff_b(p, k) + z) * f0;
                const Cplx t3 = coeff_a(p, k - 1) * fm;
                scale = std::max(
                    {scale, std::abs(t1), std::abs(t2), std::abs(t3)});
                const double res = std::abs(t1 + t2 + t3);
                if (res > worst) {
                  worst = res;
                  r.lhs = t1 + t2 + t3;
                  r.rhs = 0.0;
                }
              }
              r.residual = worst / scale;
            });
}

// ------------------------------------------------------------ connection ----

void suite_connection(const SweepSpec& spec,
                      std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-8);
  for (const PrincipalParams& p : sampled_params(spec))
    for (Cplx z : sampled_z(spec, 6)) {
      Inputs base{{"rho", fmt(p.rho)}, {"eps", fmt(p.eps)}, {"z", fmt(z)}};
      auto sys = [&](const char* which) {
        Inputs in = base;
        in["system"] = which;
        add(out, "connection", in, tol, [&, which](VerificationReport& r) {
          const ConnectionCoefficients cc = connection(p, z);
          double worst = 0.0;
          for (int k = -3; k <= 3; ++k) {
            const Cplx sk = solution(Family::s, p, z, k);
            const Cplx tk = solution(Family::t, p, z, k);
            Cplx lhs, rhs;
            if (std::string(which) == "u") {
              lhs = solution(Family::u, p, z, k);
              rhs = cc.A * sk + cc.B * tk;
            } else {
              lhs = solution(Family::v, p, z, k);
              rhs = cc.C * sk + cc.D * tk;
            }
            const double scale =
                std::max({std::abs(lhs), std::abs(rhs), 1e-300});
            if (std::abs(lhs - rhs) / scale > worst) {
              worst = std::abs(lhs - rhs) / scale;
              r.lhs = lhs;
              r.rhs = rhs;
            }
          }
          r.residual = worst;
        });
      };
      sys("u");
      sys("v");
      Inputs in = base;
      in["system"] = "inverse";
      add(out, "connection", in, tol, [&](VerificationReport& r) {
        const ConnectionCoefficients c = connection(p, z);
        const Cplx prod[2][2] = {
            {c.E * c.A + c.F * c.C, c.E * c.B + c.F * c.D},
            {c.G * c.A + c.H * c.C, c.G * c.B + c.H * c.D}};
        double worst = 0.0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            const Cplx target = i == j ? 1.0 : 0.0;
            if (std::abs(prod[i][j] - target) > worst) {
              worst = std::abs(prod[i][j] - target);
              r.lhs = prod[i][j];
              r.rhs = target;
            }
          }
        r.residual = worst;
      });
    }
}

// ------------------------------------------------------------- wronskian ----

void suite_wronskian(const SweepSpec& spec,
                     std::vector<VerificationReport>& out) {
  const double tol_k = eff_tol(spec, 1e-10);
  const double tol_cf = eff_tol(spec, 1e-8);
  for (const PrincipalParams& p : sampled_params(spec)) {
    Inputs base{{"rho", fmt(p.rho)}, {"eps", fmt(p.eps)}};
    const Cplx z(0.9, 0.7);
    {
      Inputs in = base;
      in["check"] = "k-independence";
      in["z"] = fmt(z);
      add(out, "wronskian", in, tol_k, [&](VerificationReport& r) {
        // Deviation relative to the size of the products being differenced
        // (the Wronskian itself is a cancellation of those products).
        const Cplx w0 = wronskian(Family::s, Family::t, p, z, 0);
        double worst = 0.0, scale = std::abs(w0);
        for (int k = -10; k <= 10; ++k) {
          const Cplx wk = wronskian(Family::s, Family::t, p, z, k);
          const double prod =
              coeff_a(p, k) * (std::abs(solution(Family::s, p, z, k) *
                                        solution(Family::t, p, z, k + 1)) +
                               std::abs(solution(Family::s, p, z, k + 1) *
                                        solution(Family::t, p, z, k)));
          scale = std::max(scale, prod);
          const double d = std::abs(wk - w0);
          if (d > worst) {
            worst = d;
            r.lhs = wk;
            r.rhs = w0;
          }
        }
        r.residual = worst / scale;
      });
    }
    {
      Inputs in = base;
      in["check"] = "phi-Phi-closed-form";
      in["z"] = fmt(z);
      add(out, "wronskian", in, tol_cf, [&](VerificationReport& r) {
        const Cplx mu = p.mu();
        const Cplx phi0 = std::pow(z, mu) * solution(Family::u, p, z, 0);
        const Cplx phi1 = std::pow(z, mu) * solution(Family::u, p, z, 1);
        const Cplx Phi0 = std::pow(-z, -mu) * solution(Family::v, p, z, 0);
        const Cplx Phi1 = std::pow(-z, -mu) * solution(Family::v, p, z, 1);
        r.lhs = coeff_a(p, 0) * (phi0 * Phi1 - phi1 * Phi0);
        r.rhs = wronskian_phi_Phi(p, z);
        r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
      });
    }
    {
      Inputs in = base;
      in["check"] = "s-t-at-zero";
      add(out, "wronskian", in, tol_cf, [&](VerificationReport& r) {
        const Cplx mu = p.mu();
        r.lhs = wronskian(Family::s, Family::t, p, Cplx(0.0), 0);
        r.rhs = 2.0 * mu * std::exp(lnsinpi(Cplx(p.eps + 0.5) - mu)) /
                sinpi_abs_sym(p);
        r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
      });
    }
    {
      Inputs in = base;
      in["check"] = "s-u-closed-form";
      in["z"] = fmt(z);
      add(out, "wronskian", in, tol_cf, [&](VerificationReport& r) {
        const Cplx mu = p.mu();
        r.lhs = wronskian(Family::s, Family::u, p, z, 0);
        r.rhs = std::exp(z) * std::pow(z, -2.0 * mu) * gamma_fn(1.0 + 2.0 * mu);
        r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
      });
    }
  }
  {
    const PrincipalParams p0 = PrincipalParams::principal(0.8, 0.0);
    add(out, "wronskian", {{"rho", "0.8"}, {"eps", "0"}, {"check", "eps-zero-value"}},
        tol_k, [&](VerificationReport& r) {
          r.lhs = wronskian(Family::s, Family::t, p0, Cplx(0.0), 0);
          r.rhs = Cplx(0.0, 2.0 * p0.rho);
          r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
        });
  }
}

// ------------------------------------------------------ laguerre-fn-ortho ----

void suite_laguerre_fn_ortho(const SweepSpec& spec,
                             std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-6);
  const int nmax = 5;
  for (const PrincipalParams& p : sampled_params(spec))
    add(out, "laguerre-fn-ortho",
        {{"rho", fmt(p.rho)}, {"eps", fmt(p.eps)}, {"nmax", fmt(nmax)}}, tol,
        [&](VerificationReport& r) {
          const auto g = laguerre_function_gram(p, -nmax, nmax, 1e-8);
          double worst = 0.0;
          const int dim = 2 * nmax + 1;
          for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
              const Cplx target = i == j ? 1.0 : 0.0;
              if (std::abs(g[i][j] - target) > worst) {
                worst = std::abs(g[i][j] - target);
                r.lhs = g[i][j];
                r.rhs = target;
              }
            }
          r.residual = worst;
        });
}

// -------------------------------------------------------------- spectral ----

void suite_spectral(const SweepSpec& spec,
                    std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-6);
  const std::vector<Interval> whole = {{-INFINITY, 0.0}, {0.0, INFINITY}};
  for (const PrincipalParams& p : sampled_params(spec)) {
    Inputs base{{"rho", fmt(p.rho)}, {"eps", fmt(p.eps)}};
    {
      Inputs in = base;
      in["check"] = "completeness";
      add(out, "spectral", in, tol, [&](VerificationReport& r) {
        double worst = 0.0;
        for (int n : {-1, 0, 1})
          for (int m : {-1, 0, 1}) {
            SparseVec f{{n, 1.0}}, g{{m, 1.0}};
            const Cplx e = spectral_projection(p, whole, f, g, 1e-8);
            const Cplx target = n == m ? 1.0 : 0.0;
            if (std::abs(e - target) > worst) {
              worst = std::abs(e - target);
              r.lhs = e;
              r.rhs = target;
            }
          }
        r.residual = worst;
      });
    }
    const SparseVec f{{0, 1.0}, {2, 0.5}};
    const SparseVec g{{-1, 1.0}, {1, Cplx(0.0, 1.0)}};
    for (Cplx z : sampled_z(spec, 4)) {
      Inputs in = base;
      in["check"] = "resolvent-vs-finite-section";
      in["z"] = fmt(z);
      add(out, "spectral", in, tol, [&](VerificationReport& r) {
        r.lhs = resolvent_element(p, z, f, g);
        r.rhs = finite_section_resolvent(p, z, f, g, 400);
        r.residual = std::abs(r.lhs - r.rhs);
      });
    }
    {
      Inputs in = base;
      in["check"] = "herglotz-sign";
      add(out, "spectral", in, tol, [&](VerificationReport& r) {
        const Cplx z(0.4, 0.9);
        const SparseVec e0{{0, 1.0}};
        const Cplx ge = resolvent_element(p, z, e0, e0);
        r.lhs = ge.imag() / z.imag();
        r.rhs = std::abs(r.lhs);
        r.residual = r.lhs.real() > 0.0 ? 0.0 : 1.0;
      });
    }
  }
}

// -------------------------------------------------------- jacobi-transform ----

// Test function: analytic through the hyperbolic change of variables, so its
// transform decays exponentially in lambda and the grid truncation at
// lam_max is far below the check tolerance.
double decaying_profile(double x) { return std::exp(-x); }

void suite_jacobi_transform(const SweepSpec& spec,
                            std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-5);
  for (double alpha : grid_or(spec, "alpha", {1.0, 0.0}))
    for (double beta : grid_or(spec, "beta", {0.0, 2.5})) {
      const JacobiParams p = JacobiParams::make(alpha, beta);
      Inputs base{{"alpha", fmt(alpha)}, {"beta", fmt(beta)}};

      std::vector<double> grid;
      const double h = 0.05, lam_max = 40.0;
      for (int i = 0; i * h <= lam_max + 1e-12; ++i) grid.push_back(i * h);
      if (grid.size() % 2 == 0) grid.push_back(grid.back() + h);
      const SampledTransform F =
          jacobi_transform(decaying_profile, p, grid, 1e-9);

      for (double x : {0.5, 1.0, 1.5}) {
        Inputs in = base;
        in["check"] = "round-trip";
        in["x"] = fmt(x);
        add(out, "jacobi-transform", in, tol, [&](VerificationReport& r) {
          r.lhs = jacobi_inverse(F, p, x);
          r.rhs = decaying_profile(x);
          r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
        });
      }
      {
        Inputs in = base;
        in["check"] = "parseval";
        add(out, "jacobi-transform", in, tol, [&](VerificationReport& r) {
          const Cplx lhs =
              integrate(
                  [&](double x) {
                    const double fx = decaying_profile(x);
                    return Cplx(fx * fx * jacobi_weight(p, x));
                  },
                  IntegrationDomain::half_line(0.0), 1e-11)
                  .value;
          const PlancherelMeasure m = plancherel(p);
          Cplx sum = 0.0;
          const size_t n = F.grid.size();
          auto term = [&](size_t i) -> Cplx {
            if (F.grid[i] == 0.0) return 0.0;
            return std::norm(F.values[i]) * m.density(F.grid[i]);
          };
          sum = term(0) + term(n - 1);
          for (size_t i = 1; i + 1 < n; ++i)
            sum += (i % 2 == 1 ? 4.0 : 2.0) * term(i);
          Cplx rhs = sum * h / 3.0 / (2.0 * pi);
          for (size_t j = 0; j < m.points.size(); ++j)
            rhs += m.points[j].weight * std::norm(F.discrete_values[j]);
          r.lhs = lhs;
          r.rhs = rhs;
          r.residual = std::abs(lhs - rhs) / std::abs(lhs);
        });
      }
    }
}

// -------------------------------------------------------- rep-commutators ----

void suite_rep_commutators(const SweepSpec& spec,
                           std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-12);
  const int N = 20;
  struct Labeled {
    const char* name;
    RepLabel label;
  };
  const std::vector<Labeled> labels = {
      {"positive-k0.7", RepLabel::positive(0.7)},
      {"negative-k1.3", RepLabel::negative(1.3)},
      {"principal-rho0.8-eps0.3", RepLabel::principal(0.8, 0.3)},
      {"complementary-lambda-0.3-eps0.2", RepLabel::complementary(-0.3, 0.2)}};
  for (const Labeled& l : labels) {
    Inputs base{{"series", l.name}, {"N", fmt(N)}};
    const std::vector<std::pair<const char*, std::function<double()>>> checks =
        {{"commutators", [&] { return commutator_check(l.label, N); }},
         {"star-structure", [&] { return star_structure_check(l.label, N); }},
         {"casimir-scalar", [&] { return casimir_scalar_check(l.label, N); }},
         {"lemma-hx", [&] { return lemma_hx_check(l.label, N); }}};
    for (const auto& [name, fn] : checks) {
      Inputs in = base;
      in["check"] = name;
      add(out, "rep-commutators", in, tol, [&](VerificationReport& r) {
        r.lhs = fn();
        r.rhs = 0.0;
        r.residual = std::abs(r.lhs);
      });
    }
  }
  add(out, "rep-commutators", {{"check", "theta-isomorphism"}, {"k", "0.7"}},
      tol, [&](VerificationReport& r) {
        r.lhs = theta_isomorphism_check(0.7, N);
        r.rhs = 0.0;
        r.residual = std::abs(r.lhs);
      });
}

// ------------------------------------------------------- diff-realization ----

Poly laguerre_poly(int n, double alpha, bool orthonormal) {
  // Coefficient-vector recurrence (n+1) L_{n+1} = (2n+alpha+1-x) L_n - (n+alpha) L_{n-1}.
  Poly prev{1.0};
  if (n == 0) {
    if (orthonormal) return prev;
    return prev;
  }
  Poly cur{alpha + 1.0, -1.0};
  for (int m = 1; m < n; ++m) {
    Poly next(m + 2, 0.0);
    for (size_t i = 0; i < cur.size(); ++i) {
      next[i] += (2.0 * m + alpha + 1.0) * cur[i];
      next[i + 1] -= cur[i];
    }
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= (m + alpha) * prev[i];
    for (double& c : next) c /= (m + 1.0);
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (orthonormal) {
    double logpoch = 0.0, logfact = 0.0;
    for (int j = 1; j <= n; ++j) {
      logpoch += std::log(alpha + j);
      logfact += std::log(double(j));
    }
    const double scale = std::exp(0.5 * (logfact - logpoch));
    for (double& c : cur) c *= scale;
  }
  return cur;
}

double poly_residual(const Poly& got, const Poly& want) {
  double scale = 1e-300, worst = 0.0;
  const size_t n = std::max(got.size(), want.size());
  for (size_t i = 0; i < n; ++i) {
    const double g = i < got.size() ? got[i] : 0.0;
    const double w = i < want.size() ? want[i] : 0.0;
    scale = std::max({scale, std::abs(g), std::abs(w)});
    worst = std::max(worst, std::abs(g - w));
  }
  return worst / scale;
}

void suite_diff_realization(const SweepSpec& spec,
                            std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-12);
  for (double k : grid_or(spec, "k", {0.7, 1.0})) {
    const double alpha = 2.0 * k - 1.0;
    Inputs base{{"k", fmt(k)}};
    for (Series s : {Series::positive, Series::negative}) {
      const char* sname = s == Series::positive ? "positive" : "negative";
      const double sign = s == Series::positive ? 1.0 : -1.0;
      {
        Inputs in = base;
        in["series"] = sname;
        in["check"] = "h-eigenbasis";
        add(out, "diff-realization", in, tol, [&](VerificationReport& r) {
          const PolyOp H = diff_realization(s, k, Gen::H);
          double worst = 0.0;
          for (int n = 0; n <= 10; ++n) {
            const Poly ln = laguerre_poly(n, alpha, true);
            Poly want = ln;
            for (double& c : want) c *= sign * 2.0 * (k + n);
            worst = std::max(worst, poly_residual(H.apply(ln), want));
          }
          r.lhs = worst;
          r.rhs = 0.0;
          r.residual = worst;
        });
      }
      {
        Inputs in = base;
        in["series"] = sname;
        in["check"] = "x-multiplication";
        add(out, "diff-realization", in, tol, [&](VerificationReport& r) {
          const PolyOp X = diff_realization(s, k, Gen::X);
          double worst = 0.0;
          for (int n = 0; n <= 10; ++n) {
            const Poly ln = laguerre_poly(n, alpha, true);
            Poly want(ln.size() + 1, 0.0);
            for (size_t i = 0; i < ln.size(); ++i) want[i + 1] = -sign * ln[i];
            worst = std::max(worst, poly_residual(X.apply(ln), want));
          }
          r.lhs = worst;
          r.rhs = 0.0;
          r.residual = worst;
        });
      }
      {
        Inputs in = base;
        in["series"] = sname;
        in["check"] = "commutators";
        add(out, "diff-realization", in, tol, [&](VerificationReport& r) {
          const PolyOp H = diff_realization(s, k, Gen::H);
          const PolyOp B = diff_realization(s, k, Gen::B);
          const PolyOp C = diff_realization(s, k, Gen::C);
          const PolyOp hb = poly_op_add(poly_op_compose(H, B),
                                        poly_op_compose(B, H), 1.0, -1.0);
          const PolyOp hc = poly_op_add(poly_op_compose(H, C),
                                        poly_op_compose(C, H), 1.0, -1.0);
          const PolyOp bc = poly_op_add(poly_op_compose(B, C),
                                        poly_op_compose(C, B), 1.0, -1.0);
          double worst = 0.0;
          for (int d = 0; d <= 10; ++d) {
            Poly mono(d + 1, 0.0);
            mono[d] = 1.0;
            Poly want = B.apply(mono);
            for (double& c : want) c *= 2.0;
            worst = std::max(worst, poly_residual(hb.apply(mono), want));
            want = C.apply(mono);
            for (double& c : want) c *= -2.0;
            worst = std::max(worst, poly_residual(hc.apply(mono), want));
            worst = std::max(worst,
                             poly_residual(bc.apply(mono), H.apply(mono)));
          }
          r.lhs = worst;
          r.rhs = 0.0;
          r.residual = worst;
        });
      }
    }
    {
      Inputs in = base;
      in["check"] = "casimir-scalar";
      add(out, "diff-realization", in, tol, [&](VerificationReport& r) {
        const PolyOp Om = diff_realization(Series::positive, k, Gen::Omega);
        double worst = 0.0;
        for (int n = 0; n <= 10; ++n) {
          const Poly ln = laguerre_poly(n, alpha, true);
          Poly want = ln;
          for (double& c : want) c *= k * (1.0 - k);
          worst = std::max(worst, poly_residual(Om.apply(ln), want));
        }
        r.lhs = worst;
        r.rhs = 0.0;
        r.residual = worst;
      });
    }
  }
}

// ------------------------------------------------------------ delta-omega ----

void suite_delta_omega(const SweepSpec& spec,
                       std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-12);
  struct Pair {
    double k1, k2;
  };
  for (const Pair& kk : {Pair{0.6, 0.7}, Pair{1.0, 1.0}})
    add(out, "delta-omega", {{"k1", fmt(kk.k1)}, {"k2", fmt(kk.k2)}}, tol,
        [&](VerificationReport& r) {
          double worst = 0.0;
          for (int i = 0; i <= 6; ++i)
            for (int j = 0; i + j <= 6; ++j) {
              Poly pp(i + 1, 0.0), qq(j + 1, 0.0);
              pp[i] = 1.0;
              qq[j] = 1.0;
              const BivarPoly a = delta_omega_apply(kk.k1, kk.k2, pp, qq);
              const BivarPoly b = delta_omega_composed(kk.k1, kk.k2, pp, qq);
              double scale = 1e-300;
              for (const auto& row : a)
                for (double c : row) scale = std::max(scale, std::abs(c));
              for (const auto& row : b)
                for (double c : row) scale = std::max(scale, std::abs(c));
              const size_t nr = std::max(a.size(), b.size());
              for (size_t p = 0; p < nr; ++p) {
                const size_t nc = std::max(p < a.size() ? a[p].size() : 0,
                                           p < b.size() ? b[p].size() : 0);
                for (size_t q = 0; q < nc; ++q) {
                  const double av =
                      p < a.size() && q < a[p].size() ? a[p][q] : 0.0;
                  const double bv =
                      p < b.size() && q < b[p].size() ? b[p][q] : 0.0;
                  worst = std::max(worst, std::abs(av - bv) / scale);
                }
              }
            }
          r.lhs = worst;
          r.rhs = 0.0;
          r.residual = worst;
        });
}

// --------------------------------------------------------------------- xi ----

void suite_xi(const SweepSpec& spec, std::vector<VerificationReport>& out) {
  const double tol_fd = eff_tol(spec, 1e-6);
  const double tol_euler = eff_tol(spec, 1e-8);
  struct Point {
    double rho, k1, k2, t, x;
  };
  const std::vector<Point> fd_points = {{0.8, 0.6, 0.7, 1.2, 0.9},
                                        {1.5, 0.7, 0.7, 0.5, 2.0},
                                        {0.8, 0.6, 0.7, -1.2, 0.9},
                                        {1.0, 1.0, 0.6, 2.0, 0.4}};
  for (const Point& pt : fd_points)
    add(out, "xi",
        {{"rho", fmt(pt.rho)},
         {"k1", fmt(pt.k1)},
         {"k2", fmt(pt.k2)},
         {"t", fmt(pt.t)},
         {"x", fmt(pt.x)}},
        tol_fd, [&](VerificationReport& r) {
          r.lhs = xi_residual(pt.rho, pt.k1, pt.k2, pt.t, pt.x);
          r.rhs = 0.0;
          r.residual = std::abs(r.lhs);
        });
  add(out, "xi",
      {{"rho", "0.8"}, {"k1", "0.6"}, {"k2", "0.7"}, {"t", "0"}, {"x", "1.3"}},
      tol_euler, [&](VerificationReport& r) {
        r.lhs = xi_residual(0.8, 0.6, 0.7, 0.0, 1.3);
        r.rhs = 0.0;
        r.residual = std::abs(r.lhs);
      });
}

// ------------------------------------------------------- cg-normalization ----

void suite_cg_normalization(const SweepSpec& spec,
                            std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-4);
  struct Point {
    double k1, k2, x, t;
  };
  const std::vector<Point> points = {{0.6, 0.7, 0.4, 1.2},
                                     {0.7, 0.7, 1.0, 0.8},
                                     {0.6, 1.0, 0.5, 2.0},
                                     {0.6, 0.7, 0.4, 2.4}};
  for (const Point& pt : points)
    add(out, "cg-normalization",
        {{"k1", fmt(pt.k1)},
         {"k2", fmt(pt.k2)},
         {"x", fmt(pt.x)},
         {"t", fmt(pt.t)}},
        tol, [&](VerificationReport& r) {
          const TensorParams tp = TensorParams::make(pt.k1, pt.k2);
          const CgNormalizationResult res =
              verify_cg_normalization(tp, pt.x, pt.t, 1e-9);
          r.lhs = res.integral;
          r.rhs = 1.0;
          r.residual = res.deviation;
        });
}

// --------------------------------------------------------- cg-recurrence ----

void suite_cg_recurrence(const SweepSpec& spec,
                         std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 1e-10);
  struct Point {
    double k1, k2;
    int n1, n2;
  };
  const std::vector<Point> points = {
      {0.6, 0.7, 3, 2}, {0.6, 0.7, 0, 0}, {0.6, 0.7, 5, 1}, {1.0, 0.7, 2, 4}};
  for (const Point& pt : points)
    for (double rho : grid_or(spec, "rho", {0.3, 0.8, 1.0, 2.5}))
      add(out, "cg-recurrence",
          {{"k1", fmt(pt.k1)},
           {"k2", fmt(pt.k2)},
           {"n1", fmt(pt.n1)},
           {"n2", fmt(pt.n2)},
           {"rho", fmt(rho)}},
          tol, [&](VerificationReport& r) {
            const TensorParams tp = TensorParams::make(pt.k1, pt.k2);
            r.lhs = cg_recurrence_residual(tp, rho, pt.n1, pt.n2);
            r.rhs = 0.0;
            r.residual = std::abs(r.lhs);
          });
}

// ------------------------------------------------------- product-formula ----

void suite_product_formula(const SweepSpec& spec,
                           std::vector<VerificationReport>& out) {
  const double tol_rel = eff_tol(spec, 1e-4);
  const double tol_abs = eff_tol(spec, 1e-5);
  struct Point {
    int n1, n2;
    double k1, k2, x1, x2;
  };
  const std::vector<Point> points = {
      {0, 0, 1.0, 1.0, 2.0, 1.0}, {1, 0, 1.0, 1.0, 2.0, 0.5},
      {2, 1, 0.6, 0.7, 1.5, 0.4}, {3, 3, 0.7, 1.0, 2.5, 1.0},
      {1, 2, 0.7, 0.6, 1.0, 0.3}, {0, 1, 0.6, 0.7, 0.4, 1.5},
      {2, 0, 1.0, 0.7, 0.5, 2.0}, {3, 1, 0.7, 0.7, 0.2, 1.2},
      {0, 1, 0.6, 0.7, 1.0, 1.0}, {0, 0, 1.0, 1.0, 0.7, 0.7},
      {2, 2, 0.7, 0.7, 1.5, 1.5}, {1, 3, 1.0, 0.6, 0.9, 0.9}};
  for (const Point& pt : points)
    add(out, "product-formula",
        {{"n1", fmt(pt.n1)},
         {"n2", fmt(pt.n2)},
         {"k1", fmt(pt.k1)},
         {"k2", fmt(pt.k2)},
         {"x1", fmt(pt.x1)},
         {"x2", fmt(pt.x2)}},
        tol_rel, [&](VerificationReport& r) {
          const ProductFormulaResult res = verify_product_formula(
              pt.n1, pt.n2, pt.k1, pt.k2, pt.x1, pt.x2, 1e-9);
          r.lhs = res.lhs;
          r.rhs = res.rhs;
          r.residual = res.residual;
          if (res.absolute_mode) r.tolerance = tol_abs;
        });
}

// ----------------------------------------------------------- asymptotics ----

void suite_asymptotics(const SweepSpec& spec,
                       std::vector<VerificationReport>& out) {
  const double tol = eff_tol(spec, 0.1);
  const PrincipalParams p = PrincipalParams::principal(0.9, 0.3);
  const Cplx z(1.0, 1.0);
  for (Family fam : {Family::s, Family::t, Family::u, Family::v}) {
    add(out, "asymptotics",
        {{"family", family_name(fam)},
         {"rho", fmt(p.rho)},
         {"eps", fmt(p.eps)},
         {"z", fmt(z)},
         {"k_max", "400"}},
        tol, [&](VerificationReport& r) {
          const AsymptoticReport a = asymptotic_check(fam, p, z, 400);
          r.lhs = a.computed;
          r.rhs = a.leading;
          r.residual = a.deviation;
        });
    add(out, "asymptotics",
        {{"family", family_name(fam)},
         {"check", "rate"},
         {"k_max", "100-vs-400"}},
        0.75, [&](VerificationReport& r) {
          const double d100 = asymptotic_check(fam, p, z, 100).deviation;
          const double d400 = asymptotic_check(fam, p, z, 400).deviation;
          r.lhs = d400;
          r.rhs = d100;
          r.residual = d400 / d100;
        });
  }
}

using SuiteFn = void (*)(const SweepSpec&, std::vector<VerificationReport>&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"gamma", suite_gamma},
      {"hypfun", suite_hypfun},
      {"laguerre-ortho", suite_laguerre_ortho},
      {"cdh-ortho", suite_cdh_ortho},
      {"operator-eig", suite_operator_eig},
      {"connection", suite_connection},
      {"wronskian", suite_wronskian},
      {"laguerre-fn-ortho", suite_laguerre_fn_ortho},
      {"spectral", suite_spectral},
      {"jacobi-transform", suite_jacobi_transform},
      {"rep-commutators", suite_rep_commutators},
      {"diff-realization", suite_diff_realization},
      {"delta-omega", suite_delta_omega},
      {"xi", suite_xi},
      {"cg-normalization", suite_cg_normalization},
      {"cg-recurrence", suite_cg_recurrence},
      {"product-formula", suite_product_formula},
      {"asymptotics", suite_asymptotics}};
  return table;
}

}  // namespace

const std::vector<std::string>& registered_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suite_table()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& name,
                                          const SweepSpec& spec) {
  for (const auto& [sname, fn] : suite_table())
    if (sname == name) {
      std::vector<VerificationReport> out;
      fn(spec, out);
      return out;
    }
  std::string msg = "unknown suite '" + name + "'; registered suites:";
  for (const std::string& s : registered_suites()) msg += " " + s;
  throw std::invalid_argument(msg);
}

namespace {

const char* status_name(VerificationReport::Status s) {
  switch (s) {
    case VerificationReport::Status::pass: return "pass";
    case VerificationReport::Status::fail: return "fail";
    default: return "skipped";
  }
}

}  // namespace

std::string to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const VerificationReport& r : reports) {
    nlohmann::json obj;
    obj["suite"] = r.suite;
    obj["inputs"] = r.inputs;
    obj["lhs_re"] = r.lhs.real();
    obj["lhs_im"] = r.lhs.imag();
    obj["rhs_re"] = r.rhs.real();
    obj["rhs_im"] = r.rhs.imag();
    obj["residual"] = r.residual;
    obj["tolerance"] = r.tolerance;
    obj["status"] = r.skip_reason.empty()
                        ? std::string(status_name(r.status))
                        : std::string(status_name(r.status)) + "(" +
                              r.skip_reason + ")";
    obj["runtime_s"] = r.runtime_s;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2);
}

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string q = "\"";
  for (char c : field) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

}  // namespace

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "suite,inputs,lhs_re,lhs_im,rhs_re,rhs_im,residual,tolerance,status,"
        "runtime_s\n";
  os.precision(17);
  for (const VerificationReport& r : reports) {
    std::string inputs;
    for (const auto& [k, v] : r.inputs) {
      if (!inputs.empty()) inputs += ";";
      inputs += k + "=" + v;
    }
    std::string status = r.skip_reason.empty()
                             ? status_name(r.status)
                             : std::string(status_name(r.status)) + "(" +
                                   r.skip_reason + ")";
    os << csv_quote(r.suite) << ',' << csv_quote(inputs) << ','
       << r.lhs.real() << ',' << r.lhs.imag() << ',' << r.rhs.real() << ','
       << r.rhs.imag() << ',' << r.residual << ',' << r.tolerance << ','
       << csv_quote(status) << ',' << r.runtime_s << '\n';
  }
  return os.str();
}

}  // namespace lagfun
