#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lagfun/coupling.hpp"

using namespace lagfun;

TEST_CASE("tensor parameter normalization") {
  const TensorParams tp = TensorParams::make(0.6, 0.7);
  CHECK(tp.L == 1);
  CHECK(tp.eps == doctest::Approx(0.9).epsilon(1e-14));
  const TensorParams eq = TensorParams::make(0.8, 0.8);
  CHECK(eq.L == 0);
  CHECK(eq.eps == doctest::Approx(0.0));
  CHECK_THROWS_AS(TensorParams::make(0.2, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(TensorParams::make(0.2, 0.2), std::invalid_argument);
}

TEST_CASE("decomposition coefficients are delta-orthogonal along diagonals") {
  const TensorParams tp = TensorParams::make(0.6, 0.7);
  CHECK(decomp_pairing(tp, 2, 1, 2, 1) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(decomp_pairing(tp, 2, 1, 3, 2)) < 1e-8);
  CHECK(std::abs(decomp_pairing(tp, 0, 2, 1, 3)) < 1e-8);
  CHECK_THROWS_AS(decomp_pairing(tp, 1, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("coupling constants against frozen reference values") {
  // Reference values from a 30-digit evaluation of the closed forms at
  // k1 = 0.6, k2 = 0.7, rho = 0.8, x1 = 1.5, x2 = 0.4.
  const TensorParams tp = TensorParams::make(0.6, 0.7);
  const CgConstants c = cg_constants(tp, 0.8, 1.5, 0.4);
  CHECK(c.c_minus.real() == doctest::Approx(-2.0940675738355943).epsilon(1e-13));
  CHECK(c.c_minus.imag() == doctest::Approx(0.15997891318845059).epsilon(1e-13));
  CHECK(c.c_plus.real() == doctest::Approx(-0.13308505472409543).epsilon(1e-13));
  CHECK(c.c_plus.imag() == doctest::Approx(-0.11313894266034428).epsilon(1e-13));
  CHECK(c.c_zero.real() == doctest::Approx(-0.19803100227211985).epsilon(1e-13));
  CHECK(c.c_zero.imag() == doctest::Approx(0.68312385015568487).epsilon(1e-13));
  CHECK_THROWS_AS(cg_constants(tp, 0.0, 1.5, 0.4), PoleError);
}

TEST_CASE("kernel normalization integral equals one") {
  const TensorParams tp = TensorParams::make(0.6, 0.7);
  const CgNormalizationResult r = verify_cg_normalization(tp, 0.4, 1.2);
  CHECK(r.deviation < 1e-8);
}

TEST_CASE("product formula in all three argument regimes") {
  const ProductFormulaResult greater =
      verify_product_formula(2, 1, 0.6, 0.7, 1.5, 0.4);
  CHECK(!greater.absolute_mode);
  CHECK(greater.residual < 1e-8);

  const ProductFormulaResult less =
      verify_product_formula(0, 1, 0.6, 0.7, 0.4, 1.5);
  CHECK(less.residual < 1e-8);

  const ProductFormulaResult equal =
      verify_product_formula(0, 1, 0.6, 0.7, 1.0, 1.0);
  CHECK(equal.residual < 1e-4);

  // l_1^{(1)}(2) = 0: the right-hand side must vanish too
  const ProductFormulaResult zero =
      verify_product_formula(1, 0, 1.0, 1.0, 2.0, 0.5);
  CHECK(zero.absolute_mode);
  CHECK(zero.residual < 1e-8);
}

TEST_CASE("coupled recurrence residual") {
  const TensorParams tp = TensorParams::make(0.7, 1.0);
  CHECK(cg_recurrence_residual(tp, 0.9, 2, 3) < 1e-12);
  CHECK(cg_recurrence_residual(tp, 0.9, 0, 0) < 1e-12);
}
