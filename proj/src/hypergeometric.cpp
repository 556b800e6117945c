#include "lagfun/hypergeometric.hpp"

#include <cmath>

#include "lagfun/gamma.hpp"

namespace lagfun {

namespace {

constexpr int kMaxTerms = 10000;
constexpr double kTermTol = 1e-16;

int terminating_index(Cplx a) {
  if (std::abs(a.imag()) > 1e-13) return -1;
  double r = std::round(a.real());
  if (r > 0.0 || std::abs(a.real() - r) > 1e-13) return -1;
  return int(-r);
}

}  // namespace

Cplx hyp1f1(Cplx a, Cplx b, Cplx z) {
  const int na = terminating_index(a);
  const int nb = terminating_index(b);
  if (nb >= 0 && !(na >= 0 && na <= nb))
    throw PoleError("hyp1f1: b is a nonpositive integer");

  Cplx sum = 1.0, term = 1.0;
  int small_run = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    if (na >= 0 && n == na) return sum;
    term *= (a + double(n)) * z / ((b + double(n)) * double(n + 1));
    sum += term;
    if (std::abs(term) < kTermTol * std::abs(sum)) {
      if (++small_run == 3) return sum;
    } else {
      small_run = 0;
    }
  }
  throw NonConvergence("hyp1f1: series did not stabilize", sum, std::abs(term));
}

namespace {

// Direct two-term evaluation of U; requires b away from the integers.
Cplx hypU_direct(Cplx a, Cplx b, Cplx z) {
  Cplx t1 = gamma_fn(1.0 - b) * rgamma(a - b + 1.0) * hyp1f1(a, b, z);
  Cplx t2 = gamma_fn(b - 1.0) * rgamma(a) * std::exp((1.0 - b) * std::log(z)) *
            hyp1f1(a - b + 1.0, 2.0 - b, z);
  return t1 + t2;
}

// Poincare expansion U ~ z^{-a} sum_n (a)_n (a-b+1)_n / (n! (-z)^n); the
// optimally truncated error is of order e^{-|z|}, far below the cancellation
// noise of the two-term form once |z| is large compared to the parameters.
Cplx hypU_asymptotic(Cplx a, Cplx b, Cplx z) {
  Cplx sum = 1.0, term = 1.0;
  double prev = INFINITY;
  for (int n = 0; n < 400; ++n) {
    term *= -(a + double(n)) * (a - b + 1.0 + double(n)) / (double(n + 1) * z);
    const double mag = std::abs(term);
    if (mag >= prev) break;  // divergent tail reached
    sum += term;
    if (mag < 1e-18 * std::abs(sum)) break;
    prev = mag;
  }
  return std::exp(-a * std::log(z)) * sum;
}

bool asymptotic_regime(Cplx a, Cplx b, Cplx z) {
  if (!(z.real() > 0.0)) return false;
  // When both numerator parameters have small real part the Pochhammer
  // products stay small until the terms decay, so the optimal truncation
  // error e^{-|z|} is reached already for moderate |z|. Otherwise require
  // |z| large compared to the parameter sizes.
  if (a.real() <= 1.0 && (a - b + 1.0).real() <= 1.0 && std::abs(z) >= 25.0)
    return true;
  const double p = std::abs(a) + std::abs(a - b + 1.0);
  return std::abs(z) >= 40.0 + 4.0 * p;
}

}  // namespace

namespace {

// For moderate |z| the two-term combination cancels catastrophically while
// the Poincare expansion needs smaller parameter real parts. Bridge: shift a
// down until the expansion applies, then climb back with the contiguous
// recurrence U(a+1) = -(U(a-1) + (b-2a-z) U(a)) / (a(a-b+1)). The climb is
// short (a few units of the real part), so the growth of the dominant
// companion solution stays negligible.
bool hypU_climb(Cplx a, Cplx b, Cplx z, Cplx& out) {
  if (!(z.real() > 0.0) || std::abs(z) < 25.0) return false;
  const double m = std::max(a.real(), (a - b + 1.0).real());
  const int shift = int(std::ceil(m - 1.0));
  if (shift <= 0 || shift > 60) return false;
  const Cplx a0 = a - double(shift);
  if (!asymptotic_regime(a0, b, z) || !asymptotic_regime(a0 - 1.0, b, z))
    return false;
  Cplx prev = hypU_asymptotic(a0 - 1.0, b, z);
  Cplx cur = hypU_asymptotic(a0, b, z);
  for (int j = 0; j < shift; ++j) {
    const Cplx alpha = a0 + double(j);
    const Cplx denom = alpha * (alpha - b + 1.0);
    if (std::abs(denom) < 1e-12) return false;
    const Cplx next = -(prev + (b - 2.0 * alpha - z) * cur) / denom;
    prev = cur;
    cur = next;
  }
  out = cur;
  return true;
}

}  // namespace

Cplx hypU(Cplx a, Cplx b, Cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0)
    throw BranchCutError("hypU: z on the cut (-inf, 0]");
  if (asymptotic_regime(a, b, z)) return hypU_asymptotic(a, b, z);
  Cplx bridged;
  if (hypU_climb(a, b, z, bridged)) return bridged;
  const double br = std::round(b.real());
  const bool near_integer = std::abs(b.real() - br) < 1e-6 && std::abs(b.imag()) < 1e-6;
  if (!near_integer) return hypU_direct(a, b, z);
  // Removable singularity at integer b: average symmetric complex offsets.
  constexpr double delta = 1e-5;
  Cplx bp, bm;
  if (br != 0.0) {
    bp = Cplx(br, 0.0) * Cplx(1.0, delta);
    bm = Cplx(br, 0.0) * Cplx(1.0, -delta);
  } else {
    bp = Cplx(0.0, delta);
    bm = Cplx(0.0, -delta);
  }
  return 0.5 * (hypU_direct(a, bp, z) + hypU_direct(a, bm, z));
}

namespace {

Cplx gauss_series(Cplx a, Cplx b, Cplx c, double z, int max_terms) {
  const int na = terminating_index(a);
  const int nb = terminating_index(b);
  int nterm = -1;
  if (na >= 0) nterm = na;
  if (nb >= 0 && (nterm < 0 || nb < nterm)) nterm = nb;
  const int nc = terminating_index(c);
  if (nc >= 0 && !(nterm >= 0 && nterm <= nc))
    throw PoleError("hyp2f1: c is a nonpositive integer");

  Cplx sum = 1.0, term = 1.0;
  int small_run = 0;
  for (int n = 0; n < max_terms; ++n) {
    if (nterm >= 0 && n == nterm) return sum;
    term *= (a + double(n)) * (b + double(n)) * z /
            ((c + double(n)) * double(n + 1));
    sum += term;
    if (std::abs(term) < kTermTol * std::abs(sum)) {
      if (++small_run == 3) return sum;
    } else {
      small_run = 0;
    }
  }
  throw NonConvergence("hyp2f1: series did not stabilize", sum, std::abs(term));
}

}  // namespace

Cplx hyp2f1_neg(Cplx a, Cplx b, Cplx c, double z) {
  if (z > 1e-14) throw std::domain_error("hyp2f1_neg: requires z <= 0");
  if (z > 0.0) z = 0.0;
  // Terminating series are exact at any argument.
  if (terminating_index(a) >= 0 || terminating_index(b) >= 0)
    return gauss_series(a, b, c, z, kMaxTerms);
  if (z >= -0.5) return gauss_series(a, b, c, z, kMaxTerms);
  // Pfaff: (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)), argument in (1/3, 1).
  const double w = z / (z - 1.0);
  Cplx pref = std::exp(-a * std::log(Cplx(1.0 - z)));
  return pref * gauss_series(a, c - b, c, w, 100000);
}

}  // namespace lagfun
