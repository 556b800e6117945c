#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lagfun/hypergeometric.hpp"

using namespace lagfun;

TEST_CASE("1F1 classics") {
  // 1F1(1;1;z) = e^z
  CHECK(std::abs(hyp1f1(Cplx(1.0), Cplx(1.0), Cplx(1.0)) - std::exp(1.0)) <
        1e-14 * std::exp(1.0));
  // terminating: 1F1(-2;b;z) = 1 - 2z/b + z^2/(b(b+1))
  const Cplx b(1.3), z(0.7, -0.2);
  const Cplx expect = 1.0 - 2.0 * z / b + z * z / (b * (b + 1.0));
  CHECK(std::abs(hyp1f1(Cplx(-2.0), b, z) - expect) < 1e-14);
  CHECK_THROWS_AS(hyp1f1(Cplx(0.5), Cplx(0.0), Cplx(1.0)), PoleError);
}

TEST_CASE("U at a terminating parameter: U(-1;b;z) = z - b") {
  CHECK(std::abs(hypU(Cplx(-1.0), Cplx(0.4), Cplx(2.5)) - Cplx(2.1)) < 1e-12);
  // integer b exercises the averaged limit scheme
  CHECK(std::abs(hypU(Cplx(-1.0), Cplx(1.0), Cplx(2.5)) - Cplx(1.5)) < 1e-8);
}

TEST_CASE("U satisfies the Kummer reflection U(a;b;z) = z^{1-b} U(a-b+1;2-b;z)") {
  const Cplx a(0.3, 0.9), b(0.45, -0.3), z(1.7);
  const Cplx lhs = hypU(a, b, z);
  const Cplx rhs = std::pow(z, 1.0 - b) * hypU(a - b + 1.0, 2.0 - b, z);
  CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
}

TEST_CASE("U contiguous recurrence bridges the series and asymptotic regimes") {
  // U(a-1) + (b - 2a - z) U(a) + a(a-b+1) U(a+1) = 0
  for (double z : {6.0, 30.0, 80.0}) {
    const Cplx a(0.4, 1.1), b(0.2, 2.2);
    const Cplx r = hypU(a - 1.0, b, Cplx(z)) +
                   (b - 2.0 * a - z) * hypU(a, b, Cplx(z)) +
                   a * (a - b + 1.0) * hypU(a + 1.0, b, Cplx(z));
    CHECK(std::abs(r) < 1e-9 * std::abs(hypU(a, b, Cplx(z))) * (std::abs(b) + z));
  }
}

TEST_CASE("U branch cut is rejected") {
  CHECK_THROWS_AS(hypU(Cplx(0.5), Cplx(0.3), Cplx(-1.0)), BranchCutError);
  CHECK_THROWS_AS(hypU(Cplx(0.5), Cplx(0.3), Cplx(0.0)), BranchCutError);
}

TEST_CASE("2F1 at nonpositive argument") {
  // terminating: 2F1(-1,3;2;-1/2) = 1 + 3/4
  CHECK(std::abs(hyp2f1_neg(Cplx(-1.0), Cplx(3.0), Cplx(2.0), -0.5) - 1.75) <
        1e-14);
  // 2F1(1,1;2;z) = -log(1-z)/z at z = -1 (Pfaff branch)
  CHECK(std::abs(hyp2f1_neg(Cplx(1.0), Cplx(1.0), Cplx(2.0), -1.0) -
                 0.69314718055994531) < 1e-13);
  // direct-series branch agrees with the same identity at z = -0.25
  CHECK(std::abs(hyp2f1_neg(Cplx(1.0), Cplx(1.0), Cplx(2.0), -0.25) -
                 std::log(1.25) / 0.25) < 1e-13);
  CHECK_THROWS_AS(hyp2f1_neg(Cplx(1.0), Cplx(1.0), Cplx(2.0), 0.5),
                  std::domain_error);
}
