#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lagfun/jacobi_function.hpp"

using namespace lagfun;

TEST_CASE("alpha = beta = -1/2 reduces to a cosine") {
  // phi_lambda(sinh^2 t) = cos(lambda t) for (alpha, beta) = (-1/2, -1/2)
  const JacobiParams p = JacobiParams::make(-0.5, -0.5);
  for (double lam : {1.3, 12.0, 50.0}) {
    const double t = 0.7;
    const double x = std::sinh(t) * std::sinh(t);
    const Cplx v = jacobi_fn(Cplx(lam), p, x);
    CHECK(std::abs(v - std::cos(lam * t)) < 1e-9);
  }
}

TEST_CASE("value at the origin and evenness in lambda") {
  const JacobiParams p = JacobiParams::make(1.0, 2.5);
  CHECK(std::abs(jacobi_fn(Cplx(0.9), p, 0.0) - 1.0) < 1e-14);
  const Cplx a = jacobi_fn(Cplx(3.7), p, 1.2);
  const Cplx b = jacobi_fn(Cplx(-3.7), p, 1.2);
  CHECK(std::abs(a - b) < 1e-12 * std::abs(a));
}

TEST_CASE("weight") {
  const JacobiParams p = JacobiParams::make(1.0, 0.5);
  // 2^{2a+2b+1} x^a (1+x)^b
  CHECK(jacobi_weight(p, 2.0) ==
        doctest::Approx(16.0 * 2.0 * std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("c-function: pole at zero and the (0,0) density value") {
  const JacobiParams p = JacobiParams::make(0.0, 0.0);
  CHECK_THROWS_AS(c_function(Cplx(0.0), p), PoleError);
  const Cplx c = c_function(Cplx(2.0), p);
  CHECK(1.0 / std::norm(c) ==
        doctest::Approx(3.1298810356317584).epsilon(1e-12));
}

TEST_CASE("discrete spectrum appears exactly when |beta| > alpha + 1") {
  CHECK(plancherel(JacobiParams::make(1.0, 0.0)).points.empty());
  const PlancherelMeasure m = plancherel(JacobiParams::make(0.0, 2.5));
  REQUIRE(m.points.size() == 1);
  CHECK(m.points[0].lambda.real() == doctest::Approx(0.0));
  CHECK(m.points[0].lambda.imag() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(m.points[0].weight > 0.0);
}

TEST_CASE("transform of a function orthogonal to nothing is consistent") {
  // Round-trip at a single point with a short grid; the full sweep lives in
  // the verification suite, this is a smoke test of the plumbing.
  const JacobiParams p = JacobiParams::make(0.0, 0.0);
  std::vector<double> grid;
  for (int i = 0; i <= 600; ++i) grid.push_back(0.05 * i);
  const SampledTransform F =
      jacobi_transform([](double x) { return std::exp(-x); }, p, grid, 1e-9);
  CHECK(F.discrete_values.empty());
  const Cplx back = jacobi_inverse(F, p, 1.0);
  CHECK(std::abs(back - std::exp(-1.0)) < 1e-7);
}
