#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lagfun/laguerre_operator.hpp"

using namespace lagfun;

TEST_CASE("tridiagonal coefficients") {
  const PrincipalParams p = PrincipalParams::principal(1.0, 0.0);
  // a_0 = |1/2 + i|
  CHECK(coeff_a(p, 0) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
  const PrincipalParams q = PrincipalParams::principal(1.0, 0.25);
  CHECK(coeff_b(q, -2) == doctest::Approx(-3.5).epsilon(1e-15));
  // complementary mode: a_k^2 = (k+eps+1/2)^2 - (lambda+1/2)^2
  const PrincipalParams c = PrincipalParams::complementary(-0.3, 0.2);
  CHECK(coeff_a(c, 0) == doctest::Approx(std::sqrt(0.45)).epsilon(1e-14));
}

TEST_CASE("s family is unimodular at z = 0") {
  const PrincipalParams p = PrincipalParams::principal(0.7, 0.3);
  for (int k : {-6, -1, 0, 1, 5})
    CHECK(std::abs(solution(Family::s, p, Cplx(0.0), k)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("all four families satisfy the three-term recurrence") {
  const PrincipalParams p = PrincipalParams::principal(0.9, 0.4);
  const Cplx z(0.6, 0.8);
  for (Family f : {Family::s, Family::t, Family::u, Family::v})
    for (int k : {-3, 0, 2}) {
      const Cplx fm = solution(f, p, z, k - 1);
      const Cplx f0 = solution(f, p, z, k);
      const Cplx fp = solution(f, p, z, k + 1);
      const Cplx r = coeff_a(p, k) * fp + (coeff_b(p, k) + z) * f0 +
                     coeff_a(p, k - 1) * fm;
      const double scale = std::max(
          {std::abs(fm), std::abs(f0), std::abs(fp), 1.0});
      CHECK(std::abs(r) < 1e-10 * scale * (std::abs(z) + 10.0));
    }
}

TEST_CASE("Wronskians: constancy in k and the value of [s, t] at z = 0") {
  const PrincipalParams p = PrincipalParams::principal(1.1, 0.0);
  const Cplx z(0.5, 1.2);
  const Cplx w0 = wronskian(Family::u, Family::v, p, z, 0);
  for (int k : {-4, 3})
    CHECK(std::abs(wronskian(Family::u, Family::v, p, z, k) - w0) <
          1e-10 * std::abs(w0));
  // [s(0), t(0)] = 2 i rho when eps = 0
  const Cplx st = wronskian(Family::s, Family::t, p, Cplx(0.0), 0);
  CHECK(std::abs(st - Cplx(0.0, 2.2)) < 1e-10);
}

TEST_CASE("connection coefficients reproduce u from s and t") {
  const PrincipalParams p = PrincipalParams::principal(0.8, 0.35);
  const Cplx z(0.4, 0.9);
  const ConnectionCoefficients cc = connection(p, z);
  CHECK(cc.xi == 1);
  for (int k : {-2, 0, 3}) {
    const Cplx u = solution(Family::u, p, z, k);
    const Cplx mix = cc.A * solution(Family::s, p, z, k) +
                     cc.B * solution(Family::t, p, z, k);
    CHECK(std::abs(u - mix) < 1e-9 * std::max(std::abs(u), 1.0));
  }
}

TEST_CASE("closed-form Wronskian of the normalized pair") {
  const PrincipalParams p = PrincipalParams::principal(0.6, 0.25);
  const Cplx w = wronskian_phi_Phi(p, Cplx(0.3, 0.7));
  const Cplx expected =
      pi * std::exp(Cplx(0.0, -pi * (0.25 + 0.5))) /
      std::abs(std::sin(pi * Cplx(0.75, 0.6)));
  CHECK(std::abs(w - expected) < 1e-10 * std::abs(expected));
}

TEST_CASE("spectral weight at the origin") {
  const PrincipalParams p = PrincipalParams::principal(1.0, 0.0);
  // |sin(pi(1/2 + i))|^2 / pi^2 = cosh(pi)^2 / pi^2
  CHECK(spectral_weight(0.0, p) ==
        doctest::Approx(13.614869986789201).epsilon(1e-12));
  CHECK(spectral_weight(2.0, p) ==
        doctest::Approx(13.614869986789201 * std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("recurrence eigenfunction glues the u and v families") {
  const PrincipalParams p = PrincipalParams::principal(0.9, 0.15);
  const LaguerreFunctionValue plus = laguerre_function(2, 1.4, p);
  CHECK(!plus.at_zero);
  CHECK(std::abs(plus.scalar - solution(Family::u, p, Cplx(1.4), 2)) <
        1e-12 * std::abs(plus.scalar));
  const LaguerreFunctionValue minus = laguerre_function(2, -1.4, p);
  CHECK(std::abs(minus.scalar - solution(Family::v, p, Cplx(-1.4), 2)) <
        1e-12 * std::abs(minus.scalar));
  CHECK(laguerre_function(0, 0.0, p).at_zero);
}

TEST_CASE("explicit resolvent matches a finite-section solve") {
  const PrincipalParams p = PrincipalParams::principal(0.7, 0.45);
  const Cplx z(0.3, 1.1);
  const SparseVec f{{0, 1.0}, {2, Cplx(0.0, 0.5)}};
  const SparseVec g{{-1, 1.0}};
  const Cplx direct = resolvent_element(p, z, f, g);
  const Cplx section = finite_section_resolvent(p, z, f, g, 300);
  CHECK(std::abs(direct - section) < 1e-7 * std::max(std::abs(direct), 1.0));
}

TEST_CASE("spectral projection over the whole line resolves the identity") {
  const PrincipalParams p = PrincipalParams::principal(1.0, 0.25);
  const std::vector<Interval> whole{{-INFINITY, 0.0}, {0.0, INFINITY}};
  const SparseVec e0{{0, 1.0}}, e1{{1, 1.0}};
  CHECK(std::abs(spectral_projection(p, whole, e0, e0) - 1.0) < 1e-7);
  CHECK(std::abs(spectral_projection(p, whole, e0, e1)) < 1e-7);
}
