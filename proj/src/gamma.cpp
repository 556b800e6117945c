#include "lagfun/gamma.hpp"

#include <cmath>

namespace lagfun {

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// Valid for Re z >= 0.5.
Cplx lngamma_lanczos(Cplx z) {
  Cplx sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (z - 1.0 + double(i));
  Cplx t = z + (kLanczosG - 0.5);
  return kHalfLog2Pi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

Cplx lnsinpi(Cplx z) {
  // sin(pi z) overflows for |Im z| beyond ~220; expand in the decaying
  // exponential instead.
  Cplx w = pi * z;
  double im = w.imag();
  if (std::abs(im) < 20.0) return std::log(std::sin(w));
  const Cplx i(0.0, 1.0);
  const Cplx log2i = std::log(Cplx(0.0, 2.0));
  if (im > 0.0) {
    // sin w = -e^{-iw}(1 - e^{2iw}) / (2i)
    return std::log(Cplx(-1.0, 0.0)) - i * w + std::log(1.0 - std::exp(2.0 * i * w)) - log2i;
  }
  // sin w = e^{iw}(1 - e^{-2iw}) / (2i)
  return i * w + std::log(1.0 - std::exp(-2.0 * i * w)) - log2i;
}

Cplx lngamma(Cplx z) {
  if (is_nonpositive_integer(z))
    throw PoleError("lngamma: pole at nonpositive integer z");
  if (z.real() >= 0.5) return lngamma_lanczos(z);
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
  return std::log(pi) - lnsinpi(z) - lngamma_lanczos(1.0 - z);
}

Cplx gamma_fn(Cplx z) { return std::exp(lngamma(z)); }

double gamma_abs(Cplx z) { return std::exp(lngamma(z).real()); }

Cplx rgamma(Cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-lngamma(z));
}

Cplx pochhammer(Cplx a, int n) {
  Cplx p = 1.0;
  for (int j = 0; j < n; ++j) p *= a + double(j);
  return p;
}

}  // namespace lagfun
