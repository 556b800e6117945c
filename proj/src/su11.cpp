#include "lagfun/su11.hpp"

#include <cmath>
#include <stdexcept>

#include "lagfun/jacobi_function.hpp"

namespace lagfun {

RepLabel RepLabel::positive(double k) {
  if (!(k > 0.0)) throw std::invalid_argument("RepLabel: k must be > 0");
  return RepLabel{Series::positive, k};
}

RepLabel RepLabel::negative(double k) {
  if (!(k > 0.0)) throw std::invalid_argument("RepLabel: k must be > 0");
  return RepLabel{Series::negative, k};
}

RepLabel RepLabel::principal(double rho, double eps) {
  if (!(rho >= 0.0) || !(eps >= 0.0 && eps < 1.0) || (rho == 0.0 && eps == 0.5))
    throw std::invalid_argument("RepLabel: invalid principal parameters");
  RepLabel l{Series::principal};
  l.rho = rho;
  l.eps = eps;
  return l;
}

RepLabel RepLabel::complementary(double lambda, double eps) {
  bool ok = (eps >= 0.0 && eps < 0.5 && lambda > -0.5 && lambda < -eps) ||
            (eps > 0.5 && eps < 1.0 && lambda > -0.5 && lambda < eps - 1.0);
  if (!ok)
    throw std::invalid_argument("RepLabel: invalid complementary parameters");
  RepLabel l{Series::complementary};
  l.lambda = lambda;
  l.eps = eps;
  return l;
}

double RepLabel::casimir_scalar() const {
  switch (series) {
    case Series::positive:
    case Series::negative:
      return k * (1.0 - k);
    case Series::principal:
      return rho * rho + 0.25;
    case Series::complementary:
      return -lambda * (1.0 + lambda);
  }
  return 0.0;
}

TridiagonalAction action(const RepLabel& l, Gen gen) {
  TridiagonalAction act;
  act.doubly_infinite = l.doubly_infinite();
  auto zero = [](int) { return 0.0; };
  act.lower = zero;
  act.diag = zero;
  act.upper = zero;

  // Off-diagonal magnitudes per series: up(n) multiplies e_{n+1} in B e_n
  // (positive/principal/complementary) and dn(n) multiplies e_{n-1} in C e_n.
  double k = l.k, rho = l.rho, eps = l.eps, lambda = l.lambda;
  std::function<double(int)> up, dn, h;
  switch (l.series) {
    case Series::positive:
      h = [k](int n) { return 2.0 * (k + n); };
      up = [k](int n) { return std::sqrt((n + 1.0) * (2.0 * k + n)); };
      dn = [k](int n) { return std::sqrt(n * (2.0 * k + n - 1.0)); };
      break;
    case Series::negative:
      h = [k](int n) { return -2.0 * (k + n); };
      up = [k](int n) { return std::sqrt((n + 1.0) * (2.0 * k + n)); };
      dn = [k](int n) { return std::sqrt(n * (2.0 * k + n - 1.0)); };
      break;
    case Series::principal:
      h = [eps](int n) { return 2.0 * (eps + n); };
      up = [eps, rho](int n) {
        return std::hypot(n + eps + 0.5, rho);
      };
      dn = [eps, rho](int n) { return std::hypot(n + eps - 0.5, rho); };
      break;
    case Series::complementary:
      h = [eps](int n) { return 2.0 * (eps + n); };
      up = [eps, lambda](int n) {
        return std::sqrt((n + eps + 1.0 + lambda) * (n + eps - lambda));
      };
      dn = [eps, lambda](int n) {
        return std::sqrt((n + eps + lambda) * (n + eps - lambda - 1.0));
      };
      break;
  }

  const bool neg = l.series == Series::negative;
  switch (gen) {
    case Gen::H:
      act.diag = h;
      break;
    case Gen::B:
      if (neg)
        act.lower = [dn](int n) { return -dn(n); };
      else
        act.upper = up;
      break;
    case Gen::C:
      if (neg)
        act.upper = up;
      else
        act.lower = [dn](int n) { return -dn(n); };
      break;
    case Gen::X: {  // X = -H + B - C
      TridiagonalAction bh = action(l, Gen::B), ch = action(l, Gen::C);
      act.diag = [h](int n) { return -h(n); };
      act.upper = [bh, ch](int n) { return bh.upper(n) - ch.upper(n); };
      act.lower = [bh, ch](int n) { return bh.lower(n) - ch.lower(n); };
      break;
    }
    case Gen::Omega: {
      double scalar = l.casimir_scalar();
      act.diag = [scalar](int) { return scalar; };
      break;
    }
  }
  return act;
}

namespace {

using Mat = std::vector<std::vector<double>>;

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size();
  Mat c(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      double av = a[i][k];
      if (av == 0.0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += av * b[k][j];
    }
  return c;
}

Mat mat_lin(const Mat& a, const Mat& b, double wa, double wb) {
  size_t n = a.size();
  Mat c(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) c[i][j] = wa * a[i][j] + wb * b[i][j];
  return c;
}

Mat commutator(const Mat& a, const Mat& b) {
  return mat_lin(mat_mul(a, b), mat_mul(b, a), 1.0, -1.0);
}

// Max |m[i][j]| over rows at distance >= margin from the truncation boundary.
double interior_max(const Mat& m, int margin) {
  double mx = 0.0;
  int n = int(m.size());
  for (int i = margin; i < n - margin; ++i)
    for (int j = 0; j < n; ++j) mx = std::max(mx, std::abs(m[i][j]));
  return mx;
}

}  // namespace

Mat action_matrix(const RepLabel& l, Gen gen, int N) {
  TridiagonalAction act = action(l, gen);
  int lo = l.doubly_infinite() ? -N : 0;
  int dim = N - lo + 1;
  Mat m(dim, std::vector<double>(dim, 0.0));
  for (int n = lo; n <= N; ++n) {
    int col = n - lo;
    m[col][col] = act.diag(n);
    if (n + 1 <= N) m[col + 1][col] = act.upper(n);
    if (n - 1 >= lo) m[col - 1][col] = act.lower(n);
  }
  return m;
}

double commutator_check(const RepLabel& l, int N) {
  if (N < 4) throw std::invalid_argument("commutator_check: N >= 4");
  Mat H = action_matrix(l, Gen::H, N);
  Mat B = action_matrix(l, Gen::B, N);
  Mat C = action_matrix(l, Gen::C, N);
  Mat Om = action_matrix(l, Gen::Omega, N);
  double r = 0.0;
  r = std::max(r, interior_max(mat_lin(commutator(H, B), B, 1.0, -2.0), 2));
  r = std::max(r, interior_max(mat_lin(commutator(H, C), C, 1.0, 2.0), 2));
  r = std::max(r, interior_max(mat_lin(commutator(B, C), H, 1.0, -1.0), 2));
  // Omega = -1/4 (H^2 + 2H + 4CB)
  Mat rhs = mat_lin(mat_lin(mat_mul(H, H), H, 1.0, 2.0), mat_mul(C, B), 1.0, 4.0);
  r = std::max(r, interior_max(mat_lin(Om, rhs, 1.0, 0.25), 2));
  return r;
}

double lemma_hx_check(const RepLabel& l, int N) {
  Mat H = action_matrix(l, Gen::H, N);
  Mat B = action_matrix(l, Gen::B, N);
  Mat C = action_matrix(l, Gen::C, N);
  Mat X = action_matrix(l, Gen::X, N);
  Mat hx = commutator(H, X);
  double r = 0.0;
  Mat b2 = mat_lin(mat_lin(hx, X, 0.25, 0.5), H, 1.0, 0.5);
  Mat c2 = mat_lin(mat_lin(hx, X, 0.25, -0.5), H, 1.0, -0.5);
  r = std::max(r, interior_max(mat_lin(b2, B, 1.0, -1.0), 2));
  r = std::max(r, interior_max(mat_lin(c2, C, 1.0, -1.0), 2));
  return r;
}

double star_structure_check(const RepLabel& l, int N) {
  Mat B = action_matrix(l, Gen::B, N);
  Mat C = action_matrix(l, Gen::C, N);
  double r = 0.0;
  for (size_t i = 0; i < B.size(); ++i)
    for (size_t j = 0; j < B.size(); ++j)
      r = std::max(r, std::abs(B[i][j] + C[j][i]));
  return r;
}

double casimir_scalar_check(const RepLabel& l, int N) {
  Mat Om = action_matrix(l, Gen::Omega, N);
  double scalar = l.casimir_scalar();
  for (size_t i = 0; i < Om.size(); ++i) Om[i][i] -= scalar;
  return interior_max(Om, 2);
}

double x_intertwine_check(const RepLabel& l, int N) {
  if (l.doubly_infinite())
    throw std::invalid_argument("x_intertwine_check: discrete series only");
  TridiagonalAction X = action(l, Gen::X);
  // M_x coefficients of the orthonormal Laguerre recurrence, alpha = 2k-1:
  // diag 2n+alpha+1, neighbors -sqrt((n+1)(alpha+n+1)), -sqrt(n(n+alpha)).
  const double alpha = 2.0 * l.k - 1.0;
  const double sgn = l.series == Series::positive ? -1.0 : 1.0;
  double r = 0.0;
  for (int n = 0; n <= N; ++n) {
    r = std::max(r, std::abs(X.diag(n) - sgn * (2.0 * n + alpha + 1.0)));
    r = std::max(r, std::abs(X.upper(n) +
                             sgn * std::sqrt((n + 1.0) * (alpha + n + 1.0))));
    r = std::max(r, std::abs(X.lower(n) + sgn * std::sqrt(n * (n + alpha))));
  }
  return r;
}

double theta_isomorphism_check(double k, int N) {
  RepLabel pos = RepLabel::positive(k), neg = RepLabel::negative(k);
  // theta: H -> -H, B -> C, C -> B; pi+(theta(Y)) = pi-(Y).
  struct Pair {
    Gen lhs;      // argument of pi+ (already theta-applied)
    Gen rhs;      // argument of pi-
    double sign;  // applied to pi+ matrix
  };
  const Pair pairs[] = {{Gen::H, Gen::H, -1.0}, {Gen::C, Gen::B, 1.0},
                        {Gen::B, Gen::C, 1.0}};
  double r = 0.0;
  for (const Pair& pr : pairs) {
    Mat a = action_matrix(pos, pr.lhs, N);
    Mat b = action_matrix(neg, pr.rhs, N);
    r = std::max(r, interior_max(mat_lin(a, b, pr.sign, -1.0), 0));
  }
  return r;
}

namespace {

Poly poly_trim(Poly p) {
  while (p.size() > 1 && p.back() == 0.0) p.pop_back();
  return p;
}

Poly poly_add(const Poly& a, const Poly& b, double wa = 1.0, double wb = 1.0) {
  Poly c(std::max(a.size(), b.size()), 0.0);
  for (size_t i = 0; i < a.size(); ++i) c[i] += wa * a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += wb * b[i];
  return c;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {0.0};
  Poly c(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly poly_diff(const Poly& p) {
  if (p.size() <= 1) return {0.0};
  Poly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = double(i) * p[i];
  return d;
}

}  // namespace

Poly PolyOp::apply(const Poly& p) const {
  Poly result{0.0};
  Poly der = p;
  for (size_t j = 0; j < terms.size(); ++j) {
    if (j > 0) der = poly_diff(der);
    result = poly_add(result, poly_mul(terms[j], der));
  }
  return poly_trim(result);
}

PolyOp poly_op_add(const PolyOp& a, const PolyOp& b, double wa, double wb) {
  PolyOp c;
  c.terms.resize(std::max(a.terms.size(), b.terms.size()), Poly{0.0});
  for (size_t j = 0; j < c.terms.size(); ++j) {
    Poly pa = j < a.terms.size() ? a.terms[j] : Poly{0.0};
    Poly pb = j < b.terms.size() ? b.terms[j] : Poly{0.0};
    c.terms[j] = poly_add(pa, pb, wa, wb);
  }
  return c;
}

PolyOp poly_op_compose(const PolyOp& outer, const PolyOp& inner) {
  // (A d^i) (B d^j) = sum_m binom(i,m) A B^(m) d^{i-m+j}
  PolyOp c;
  for (size_t i = 0; i < outer.terms.size(); ++i) {
    const Poly& A = outer.terms[i];
    for (size_t j = 0; j < inner.terms.size(); ++j) {
      Poly Bm = inner.terms[j];  // m-th derivative of B, starting at m = 0
      double binom = 1.0;
      for (size_t m = 0; m <= i; ++m) {
        size_t order = i - m + j;
        if (c.terms.size() <= order) c.terms.resize(order + 1, Poly{0.0});
        c.terms[order] = poly_add(c.terms[order], poly_mul(A, Bm), 1.0, binom);
        binom *= double(i - m) / double(m + 1);
        Bm = poly_diff(Bm);
      }
    }
  }
  return c;
}

PolyOp diff_realization(Series s, double k, Gen gen) {
  if (s != Series::positive && s != Series::negative)
    throw std::invalid_argument("diff_realization: discrete series only");
  // pi_k^-(Y) = pi_k^+(theta(Y)): swap B and C, negate H.
  if (s == Series::negative && (gen == Gen::H || gen == Gen::B || gen == Gen::C)) {
    if (gen != Gen::H)
      return diff_realization(Series::positive, k,
                              gen == Gen::B ? Gen::C : Gen::B);
    PolyOp op = diff_realization(Series::positive, k, Gen::H);
    for (Poly& t : op.terms)
      for (double& c : t) c = -c;
    return op;
  }
  PolyOp op;
  switch (gen) {
    case Gen::H:  // -2x D^2 - 2(2k-x) D + 2k
      op.terms = {{2.0 * k}, {-4.0 * k, 2.0}, {0.0, -2.0}};
      break;
    case Gen::B:  // -x D^2 - 2(k-x) D + (2k-x)
      op.terms = {{2.0 * k, -1.0}, {-2.0 * k, 2.0}, {0.0, -1.0}};
      break;
    case Gen::C:  // x D^2 + 2k D
      op.terms = {{0.0}, {2.0 * k}, {0.0, 1.0}};
      break;
    case Gen::X: {
      PolyOp h = diff_realization(s, k, Gen::H);
      PolyOp b = diff_realization(s, k, Gen::B);
      PolyOp cc = diff_realization(s, k, Gen::C);
      return poly_op_add(poly_op_add(h, b, -1.0, 1.0), cc, 1.0, -1.0);
    }
    case Gen::Omega: {
      PolyOp h = diff_realization(s, k, Gen::H);
      PolyOp b = diff_realization(s, k, Gen::B);
      PolyOp cc = diff_realization(s, k, Gen::C);
      PolyOp h2 = poly_op_compose(h, h);
      PolyOp cb = poly_op_compose(cc, b);
      return poly_op_add(poly_op_add(h2, h, -0.25, -0.5), cb, 1.0, -1.0);
    }
  }
  if (s == Series::negative)
    for (Poly& t : op.terms)
      for (double& c : t) c = -c;
  return op;
}

namespace {

void bivar_accumulate(BivarPoly& g, const Poly& a, const Poly& b, int s1,
                      int s2, double w) {
  size_t need1 = a.size() + s1, need2 = b.size() + s2;
  if (g.size() < need1) g.resize(need1);
  for (auto& row : g)
    if (row.size() < need2) row.resize(need2, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) g[i + s1][j + s2] += w * a[i] * b[j];
}

}  // namespace

BivarPoly delta_omega_apply(double k1, double k2, const Poly& p, const Poly& q) {
  Poly dp = poly_diff(p), ddp = poly_diff(dp);
  Poly dq = poly_diff(q), ddq = poly_diff(dq);
  BivarPoly g;
  // -x1 x2 (p'' q + 2 p' q' + p q'')
  bivar_accumulate(g, ddp, q, 1, 1, -1.0);
  bivar_accumulate(g, dp, dq, 1, 1, -2.0);
  bivar_accumulate(g, p, ddq, 1, 1, -1.0);
  // (2 x1 x2 - 2 k1 x2 - 2 k2 x1)(p' q + p q')
  bivar_accumulate(g, dp, q, 1, 1, 2.0);
  bivar_accumulate(g, p, dq, 1, 1, 2.0);
  bivar_accumulate(g, dp, q, 0, 1, -2.0 * k1);
  bivar_accumulate(g, p, dq, 0, 1, -2.0 * k1);
  bivar_accumulate(g, dp, q, 1, 0, -2.0 * k2);
  bivar_accumulate(g, p, dq, 1, 0, -2.0 * k2);
  // (2 k1 x2 + 2 k2 x1 - 2 k1 k2 - x1 x2 + k1(1-k1) + k2(1-k2)) p q
  bivar_accumulate(g, p, q, 0, 1, 2.0 * k1);
  bivar_accumulate(g, p, q, 1, 0, 2.0 * k2);
  bivar_accumulate(g, p, q, 1, 1, -1.0);
  bivar_accumulate(g, p, q, 0, 0,
                   -2.0 * k1 * k2 + k1 * (1.0 - k1) + k2 * (1.0 - k2));
  return g;
}

BivarPoly delta_omega_composed(double k1, double k2, const Poly& p,
                               const Poly& q) {
  PolyOp h1 = diff_realization(Series::positive, k1, Gen::H);
  PolyOp b1 = diff_realization(Series::positive, k1, Gen::B);
  PolyOp c1 = diff_realization(Series::positive, k1, Gen::C);
  PolyOp om1 = diff_realization(Series::positive, k1, Gen::Omega);
  PolyOp h2 = diff_realization(Series::negative, k2, Gen::H);
  PolyOp b2 = diff_realization(Series::negative, k2, Gen::B);
  PolyOp c2 = diff_realization(Series::negative, k2, Gen::C);
  PolyOp om2 = diff_realization(Series::negative, k2, Gen::Omega);

  BivarPoly g;
  bivar_accumulate(g, p, om2.apply(q), 0, 0, 1.0);
  bivar_accumulate(g, om1.apply(p), q, 0, 0, 1.0);
  bivar_accumulate(g, h1.apply(p), h2.apply(q), 0, 0, -0.5);
  bivar_accumulate(g, c1.apply(p), b2.apply(q), 0, 0, -1.0);
  bivar_accumulate(g, b1.apply(p), c2.apply(q), 0, 0, -1.0);
  return g;
}

double xi_residual(double rho, double k1, double k2, double t, double x) {
  const double eig = rho * rho + 0.25;
  if (t == 0.0) {
    // Euler branch: y = x^p with p = 1/2 - k1 - k2 + i rho, analytic residual.
    Cplx p(0.5 - k1 - k2, rho);
    Cplx scalar = -p * (p - 1.0) - (2.0 * k1 + 2.0 * k2) * p +
                  (k1 + k2) * (1.0 - k1 - k2) - eig;
    return std::abs(scalar) / (eig + std::norm(p));
  }
  if (t < 0.0) return xi_residual(rho, k2, k1, -t, x);

  JacobiParams jp = JacobiParams::make(2.0 * k1 - 1.0, 2.0 * k2 - 1.0);
  auto phi = [&](double y) {
    return jacobi_fn(Cplx(2.0 * rho, 0.0), jp, y / t);
  };
  auto residual_at = [&](double h) {
    Cplx f0 = phi(x), fp = phi(x + h), fm = phi(x - h);
    Cplx d1 = (fp - fm) / (2.0 * h);
    Cplx d2 = (fp - 2.0 * f0 + fm) / (h * h);
    Cplx lhs = -x * (x + t) * d2 - (2.0 * k1 * (x + t) + 2.0 * k2 * x) * d1 +
               (k1 * (1.0 - k1) + k2 * (1.0 - k2) - 2.0 * k1 * k2) * f0;
    return lhs - eig * f0;
  };
  const double h = 1e-3;
  Cplx r1 = residual_at(h), r2 = residual_at(0.5 * h);
  Cplx rich = r2 + (r2 - r1) / 3.0;
  double scale = eig * std::abs(phi(x)) + 1.0;
  return std::abs(rich) / scale;
}

}  // namespace lagfun
