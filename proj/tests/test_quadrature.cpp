#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "lagfun/quadrature.hpp"

using namespace lagfun;

TEST_CASE("Gauss-Laguerre: moments of the weight") {
  const QuadratureRule r = gauss_laguerre(20, 0.0);
  REQUIRE(r.nodes.size() == 20);
  for (size_t i = 0; i + 1 < r.nodes.size(); ++i) {
    CHECK(r.nodes[i] > 0.0);
    CHECK(r.nodes[i] < r.nodes[i + 1]);
  }
  // int_0^inf x^5 e^{-x} dx = 5! (exact for a degree-39 rule)
  double m5 = 0.0, m0 = 0.0;
  for (size_t i = 0; i < r.nodes.size(); ++i) {
    m5 += r.weights[i] * std::pow(r.nodes[i], 5);
    m0 += r.weights[i];
  }
  CHECK(m5 == doctest::Approx(120.0).epsilon(1e-13));
  CHECK(m0 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Gauss-Laguerre with alpha: total mass is Gamma(alpha+1)") {
  const double alpha = 1.7;
  const QuadratureRule r = gauss_laguerre(15, alpha);
  const double mass = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
  CHECK(mass == doctest::Approx(std::tgamma(alpha + 1.0)).epsilon(1e-13));
}

TEST_CASE("adaptive integration on a finite interval") {
  auto est = integrate([](double x) { return Cplx(x * x); },
                       IntegrationDomain::finite(0.0, 1.0), 1e-12);
  CHECK(std::abs(est.value - 1.0 / 3.0) < 1e-13);
  CHECK(est.error_estimate < 1e-12);
}

TEST_CASE("adaptive integration on the half line") {
  // int_0^inf e^{-x} cos(x) dx = 1/2
  auto osc = integrate(
      [](double x) { return Cplx(std::exp(-x) * std::cos(x)); },
      IntegrationDomain::half_line(0.0), 1e-12);
  CHECK(std::abs(osc.value - 0.5) < 1e-12);
  // int_1^inf e^{-x^2} dx = sqrt(pi)/2 erfc(1)
  auto gauss = integrate([](double x) { return Cplx(std::exp(-x * x)); },
                         IntegrationDomain::half_line(1.0), 1e-12);
  CHECK(std::abs(gauss.value - 0.5 * std::sqrt(pi) * std::erfc(1.0)) < 1e-12);
}

TEST_CASE("budget exhaustion raises NonConvergence with the best estimate") {
  try {
    integrate([](double x) { return Cplx(std::cos(200.0 * x * x)); },
              IntegrationDomain::finite(0.0, 10.0), 1e-14, 500);
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(std::isfinite(e.best_estimate.real()));
    CHECK(e.achieved_error > 0.0);
  }
}

TEST_CASE("vector integration matches componentwise scalar integration") {
  auto vec = integrate_vector(
      [](double x) {
        return std::vector<Cplx>{Cplx(std::exp(-x)), Cplx(x * std::exp(-x))};
      },
      2, IntegrationDomain::half_line(0.0), 1e-12);
  REQUIRE(vec.value.size() == 2);
  CHECK(std::abs(vec.value[0] - 1.0) < 1e-12);
  CHECK(std::abs(vec.value[1] - 1.0) < 1e-12);
}
