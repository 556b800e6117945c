#include "lagfun/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace lagfun {

namespace {

// G7/K15 pair (positive half, QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double vec_norm(const Cplx& v) { return std::abs(v); }
double vec_norm(const std::vector<Cplx>& v) {
  double m = 0.0;
  for (const Cplx& x : v) m = std::max(m, std::abs(x));
  return m;
}

void vec_axpy(Cplx& acc, double w, const Cplx& v) { acc += w * v; }
void vec_axpy(std::vector<Cplx>& acc, double w, const std::vector<Cplx>& v) {
  for (size_t i = 0; i < acc.size(); ++i) acc[i] += w * v[i];
}

void vec_sub_scaled(Cplx& out, const Cplx& a, const Cplx& b) { out = a - b; }
void vec_sub_scaled(std::vector<Cplx>& out, const std::vector<Cplx>& a,
                    const std::vector<Cplx>& b) {
  for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
}

template <class T, class F>
struct Panel {
  double a, b;
  T value;
  double error;
};

// One G7/K15 evaluation on [a, b]. Returns (K15 value, error estimate).
template <class T, class F>
void gk15(const F& f, double a, double b, T& k15, double& err, T scratch) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T g7 = scratch;
  T fc = f(c);
  k15 = scratch;
  vec_axpy(k15, kWgk[7], fc);
  vec_axpy(g7, kWg[3], fc);
  for (int i = 0; i < 7; ++i) {
    T lo = f(c - h * kXgk[i]);
    T hi = f(c + h * kXgk[i]);
    vec_axpy(k15, kWgk[i], lo);
    vec_axpy(k15, kWgk[i], hi);
    if (i % 2 == 1) {
      vec_axpy(g7, kWg[i / 2], lo);
      vec_axpy(g7, kWg[i / 2], hi);
    }
  }
  T diff = scratch;
  vec_sub_scaled(diff, k15, g7);
  // Scale to the interval.
  if constexpr (std::is_same_v<T, Cplx>) {
    k15 *= h;
  } else {
    for (Cplx& x : k15) x *= h;
  }
  double d = h * vec_norm(diff);
  // QUADPACK-style sharpened estimate.
  err = (d > 0.0) ? std::min(d, 200.0 * d * std::sqrt(200.0 * d)) : 0.0;
  if (!(err < 1e300)) err = d;
}

template <class T, class F>
void adaptive(const F& f, const std::vector<double>& breaks, double tol,
              long max_evaluations, T zero, T& value_out, double& err_out,
              long& evals_out) {
  struct Entry {
    double error;
    size_t idx;
    bool operator<(const Entry& o) const { return error < o.error; }
  };
  std::vector<Panel<T, F>> panels;
  std::priority_queue<Entry> heap;
  long evals = 0;

  auto push = [&](double a, double b) {
    Panel<T, F> p{a, b, zero, 0.0};
    gk15(f, a, b, p.value, p.error, zero);
    evals += 15;
    panels.push_back(std::move(p));
    heap.push({panels.back().error, panels.size() - 1});
  };

  for (size_t i = 0; i + 1 < breaks.size(); ++i) push(breaks[i], breaks[i + 1]);

  auto total = [&](T& v, double& e) {
    v = zero;
    e = 0.0;
    for (const auto& p : panels) {
      vec_axpy(v, 1.0, p.value);
      e += p.error;
    }
  };

  T value = zero;
  double err = 0.0;
  total(value, err);
  long since_refresh = 0;
  while (err > tol * std::max(1.0, vec_norm(value))) {
    if (evals + 30 > max_evaluations || heap.empty()) {
      total(value, err);
      if (err <= tol * std::max(1.0, vec_norm(value))) break;
      if constexpr (std::is_same_v<T, Cplx>) {
        throw NonConvergence("integrate: evaluation budget exhausted", value, err);
      } else {
        throw NonConvergence("integrate: evaluation budget exhausted",
                             value.empty() ? Cplx{} : value[0], err);
      }
    }
    Entry top = heap.top();
    heap.pop();
    if (panels[top.idx].error != top.error) continue;  // stale entry
    double a = panels[top.idx].a, b = panels[top.idx].b;
    double m = 0.5 * (a + b);
    if (m <= a || m >= b) {
      // Interval at floating-point resolution; accept its error.
      err -= panels[top.idx].error;
      panels[top.idx].error = 0.0;
      continue;
    }
    // Replace the panel in place with its left half, append the right half.
    Panel<T, F> old = panels[top.idx];
    Panel<T, F> left{a, m, zero, 0.0};
    gk15(f, a, m, left.value, left.error, zero);
    evals += 15;
    panels[top.idx] = std::move(left);
    heap.push({panels[top.idx].error, top.idx});
    push(m, b);
    // Incremental totals; refresh periodically against float drift.
    err += panels[top.idx].error + panels.back().error - old.error;
    vec_axpy(value, 1.0, panels[top.idx].value);
    vec_axpy(value, 1.0, panels.back().value);
    vec_axpy(value, -1.0, old.value);
    if (++since_refresh >= 256) {
      total(value, err);
      since_refresh = 0;
    }
  }
  total(value, err);
  value_out = value;
  err_out = err;
  evals_out = evals;
}

std::vector<double> initial_breaks(const IntegrationDomain& d) {
  if (!d.upper_infinite) {
    std::vector<double> br;
    for (int i = 0; i <= 8; ++i) br.push_back(d.a + (d.b - d.a) * i / 8.0);
    return br;
  }
  // Mapped variable u in (0,1]; grade geometrically toward 0 so endpoint
  // singularities u^sigma, sigma > -1, start resolved.
  std::vector<double> br{0.0};
  for (int j = 44; j >= 1; --j) br.push_back(std::ldexp(1.0, -j));
  br.push_back(1.0);
  return br;
}

}  // namespace

IntegralEstimate integrate(const std::function<Cplx(double)>& f,
                           IntegrationDomain domain, double tol,
                           long max_evaluations) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be > 0");
  IntegralEstimate est;
  auto g = [&](double t) -> Cplx {
    if (!domain.upper_infinite) return f(t);
    return f(domain.a - std::log(t)) / t;
  };
  adaptive(g, initial_breaks(domain), tol, max_evaluations, Cplx{0.0, 0.0},
           est.value, est.error_estimate, est.evaluations);
  return est;
}

VectorIntegralEstimate integrate_vector(
    const std::function<std::vector<Cplx>(double)>& f, int dim,
    IntegrationDomain domain, double tol, long max_evaluations) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be > 0");
  VectorIntegralEstimate est;
  auto g = [&](double t) -> std::vector<Cplx> {
    if (!domain.upper_infinite) return f(t);
    std::vector<Cplx> v = f(domain.a - std::log(t));
    for (Cplx& x : v) x /= t;
    return v;
  };
  adaptive(g, initial_breaks(domain), tol, max_evaluations,
           std::vector<Cplx>(dim, Cplx{0.0, 0.0}), est.value,
           est.error_estimate, est.evaluations);
  return est;
}

namespace {

// Symmetric tridiagonal QL with implicit shifts, accumulating only the first
// row of the eigenvector matrix (all that Golub-Welsch needs).
void tridiag_ql_first_row(std::vector<double>& d, std::vector<double>& e,
                          std::vector<double>& z) {
  const int n = int(d.size());
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-15 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw NonConvergence("gauss_laguerre: QL iteration stalled", 0.0, 0.0);
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  e.pop_back();
}

}  // namespace

QuadratureRule gauss_laguerre(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
  if (!(alpha > -1.0))
    throw std::invalid_argument("gauss_laguerre: alpha must be > -1");
  std::vector<double> d(n), e(std::max(0, n - 1)), z(n, 0.0);
  for (int i = 0; i < n; ++i) d[i] = 2.0 * i + alpha + 1.0;
  for (int i = 0; i + 1 < n; ++i) e[i] = std::sqrt((i + 1.0) * (i + 1.0 + alpha));
  z[0] = 1.0;
  tridiag_ql_first_row(d, e, z);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });

  const double mu0 = std::exp(std::lgamma(alpha + 1.0));
  QuadratureRule rule;
  rule.domain = QuadratureRule::Domain::semi_infinite_exp_weight;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  for (int idx : order) {
    rule.nodes.push_back(d[idx]);
    rule.weights.push_back(mu0 * z[idx] * z[idx]);
  }
  return rule;
}

}  // namespace lagfun
