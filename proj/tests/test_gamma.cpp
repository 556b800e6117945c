#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lagfun/gamma.hpp"

using namespace lagfun;

TEST_CASE("gamma at classical points") {
  CHECK(std::abs(gamma_fn(Cplx(0.5)) - std::sqrt(pi)) < 1e-14);
  CHECK(std::abs(gamma_fn(Cplx(5.0)) - 24.0) < 1e-12);
  // |Gamma(iy)|^2 = pi / (y sinh(pi y))
  CHECK(gamma_abs(Cplx(0.0, 2.0)) ==
        doctest::Approx(0.07659480939561731).epsilon(1e-14));
  // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
  const double y = 0.8;
  CHECK(gamma_abs(Cplx(0.5, y)) ==
        doctest::Approx(std::sqrt(pi / std::cosh(pi * y))).epsilon(1e-14));
}

TEST_CASE("recursion Gamma(z+1) = z Gamma(z) off the real axis") {
  const Cplx z(0.3, 1.7);
  CHECK(std::abs(gamma_fn(z + 1.0) - z * gamma_fn(z)) <
        1e-14 * std::abs(gamma_fn(z + 1.0)));
}

TEST_CASE("poles and the entire reciprocal") {
  CHECK_THROWS_AS(gamma_fn(Cplx(-2.0)), PoleError);
  CHECK_THROWS_AS(lngamma(Cplx(0.0)), PoleError);
  CHECK(rgamma(Cplx(0.0)) == Cplx(0.0));
  CHECK(rgamma(Cplx(-3.0)) == Cplx(0.0));
  CHECK(std::abs(rgamma(Cplx(4.0)) - 1.0 / 6.0) < 1e-15);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Cplx(2.5), 0) == Cplx(1.0));
  CHECK(std::abs(pochhammer(Cplx(2.5), 3) - 2.5 * 3.5 * 4.5) < 1e-13);
  const Cplx a(0.4, -1.1);
  CHECK(std::abs(pochhammer(a, 2) - a * (a + 1.0)) < 1e-14 * std::abs(a * (a + 1.0)));
}

TEST_CASE("lnsinpi agrees with the direct logarithm and stays finite high up") {
  const Cplx z(0.3, 0.4);
  CHECK(std::abs(std::exp(lnsinpi(z)) - std::sin(pi * z)) < 1e-14);
  // sin(pi(x+iy)) ~ e^{pi y}/(2i) e^{-i pi x} for large y: check the modulus.
  const Cplx big(0.3, 50.0);
  CHECK(lnsinpi(big).real() ==
        doctest::Approx(pi * 50.0 - std::log(2.0)).epsilon(1e-13));
}
