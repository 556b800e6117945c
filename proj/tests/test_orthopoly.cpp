#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lagfun/orthopoly.hpp"
#include "lagfun/quadrature.hpp"

using namespace lagfun;

TEST_CASE("Laguerre closed forms") {
  const double a = 0.7, x = 1.3;
  CHECK(laguerre(0, a, x) == 1.0);
  CHECK(laguerre(1, a, x) == doctest::Approx(1.0 + a - x).epsilon(1e-15));
  const double l2 = 0.5 * x * x - (a + 2.0) * x + 0.5 * (a + 1.0) * (a + 2.0);
  CHECK(laguerre(2, a, x) == doctest::Approx(l2).epsilon(1e-14));
}

TEST_CASE("orthonormal Laguerre Gram via Gauss-Laguerre") {
  const double alpha = 0.3;
  const QuadratureRule r = gauss_laguerre(40, alpha);
  const double norm = std::tgamma(alpha + 1.0);
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= n; ++m) {
      double g = 0.0;
      for (size_t i = 0; i < r.nodes.size(); ++i)
        g += r.weights[i] * laguerre_orthonormal(n, alpha, r.nodes[i]) *
             laguerre_orthonormal(m, alpha, r.nodes[i]) / norm;
      CHECK(g == doctest::Approx(n == m ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("normalized Laguerre weight integrates to one") {
  const double alpha = 2.5;
  auto est = integrate(
      [&](double x) { return Cplx(laguerre_weight(alpha, x)); },
      IntegrationDomain::half_line(0.0), 1e-12);
  CHECK(std::abs(est.value - 1.0) < 1e-11);
}

TEST_CASE("continuous dual Hahn low degrees") {
  const double a = 0.3, b = 0.8, c = 1.1, y = 0.49;
  CHECK(cdh(0, y, a, b, c) == 1.0);
  // s_1(y) = (a+b)(a+c) - (a^2+y)
  CHECK(cdh(1, y, a, b, c) == doctest::Approx(0.96).epsilon(1e-14));
  // recurrence path (n >= threshold) stays consistent with symmetry in b,c
  CHECK(cdh(7, y, a, b, c) == doctest::Approx(cdh(7, y, a, c, b)).epsilon(1e-12));
}

TEST_CASE("dual Hahn orthonormality, purely continuous measure") {
  const CdhParams p = CdhParams::make(0.4, 0.9, 1.2);
  const CdhMeasure m = cdh_measure(p);
  CHECK(m.masses.empty());
  CHECK(cdh_integrate(m, [](double) { return 1.0; }) ==
        doctest::Approx(1.0).epsilon(1e-10));
  for (int n = 0; n <= 4; ++n)
    for (int mm = 0; mm <= n; ++mm) {
      const double g = cdh_integrate(m, [&](double y) {
        return cdh_orthonormal(n, y, p) * cdh_orthonormal(mm, y, p);
      });
      CHECK(g == doctest::Approx(n == mm ? 1.0 : 0.0).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("dual Hahn orthonormality with a discrete mass (negative parameter)") {
  const CdhParams p = CdhParams::make(-0.3, 0.9, 1.2);
  const CdhMeasure m = cdh_measure(p);
  REQUIRE(m.masses.size() == 1);
  CHECK(m.masses[0].y == doctest::Approx(-0.09).epsilon(1e-14));
  CHECK(m.masses[0].weight > 0.0);
  CHECK(cdh_integrate(m, [](double) { return 1.0; }) ==
        doctest::Approx(1.0).epsilon(1e-10));
  const double g01 = cdh_integrate(m, [&](double y) {
    return cdh_orthonormal(0, y, p) * cdh_orthonormal(1, y, p);
  });
  CHECK(std::abs(g01) < 1e-9);
}

TEST_CASE("decomposition polynomial branch selection") {
  // p <= 0 triple: (k1-k2+1/2, k1+k2-1/2, k2-k1-p+1/2)
  const DecompCdhResult neg = decomp_cdh(1, 0.25, -2, 0.6, 0.7);
  CHECK(neg.params.a == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(neg.params.b == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(neg.params.c == doctest::Approx(2.6).epsilon(1e-14));
  // p >= 0 triple: (k2-k1+1/2, k1+k2-1/2, k1-k2+p+1/2)
  const DecompCdhResult pos = decomp_cdh(1, 0.25, 2, 0.6, 0.7);
  CHECK(pos.params.a == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(pos.params.c == doctest::Approx(2.4).epsilon(1e-14));
  CHECK_THROWS_AS(decomp_cdh(0, 0.0, 0, 0.1, 0.2), std::invalid_argument);
}
