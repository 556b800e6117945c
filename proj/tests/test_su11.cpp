#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lagfun/su11.hpp"

using namespace lagfun;

namespace {

const RepLabel kLabels[] = {
    RepLabel::positive(0.7), RepLabel::negative(1.2),
    RepLabel::principal(0.9, 0.3), RepLabel::complementary(-0.45, 0.6)};

}  // namespace

TEST_CASE("Casimir scalars") {
  CHECK(RepLabel::positive(0.7).casimir_scalar() ==
        doctest::Approx(0.7 * 0.3).epsilon(1e-15));
  CHECK(RepLabel::principal(0.9, 0.3).casimir_scalar() ==
        doctest::Approx(0.81 + 0.25).epsilon(1e-15));
  CHECK(RepLabel::complementary(-0.45, 0.6).casimir_scalar() ==
        doctest::Approx(0.45 * 0.55).epsilon(1e-15));
}

TEST_CASE("commutation relations and the Casimir on every series") {
  for (const RepLabel& l : kLabels) {
    CHECK(commutator_check(l, 16) < 1e-12);
    CHECK(casimir_scalar_check(l, 16) < 1e-12);
    CHECK(lemma_hx_check(l, 16) < 1e-12);
    CHECK(star_structure_check(l, 16) < 1e-12);
  }
}

TEST_CASE("X is assembled from the generators") {
  const RepLabel l = RepLabel::positive(0.8);
  const auto X = action_matrix(l, Gen::X, 8);
  const auto H = action_matrix(l, Gen::H, 8);
  const auto B = action_matrix(l, Gen::B, 8);
  const auto C = action_matrix(l, Gen::C, 8);
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = 0; j < X.size(); ++j)
      CHECK(X[i][j] ==
            doctest::Approx(-H[i][j] + B[i][j] - C[i][j]).epsilon(1e-13));
}

TEST_CASE("X matches the orthonormal Laguerre recurrence on the discrete series") {
  CHECK(x_intertwine_check(RepLabel::positive(0.6), 20) < 1e-12);
  CHECK(x_intertwine_check(RepLabel::negative(1.1), 20) < 1e-12);
}

TEST_CASE("the flip H -> -H, B <-> C intertwines the two discrete series") {
  CHECK(theta_isomorphism_check(0.7, 15) < 1e-12);
}

TEST_CASE("differential realization: H has the Laguerre polynomials as"
          " eigenfunctions") {
  const double k = 0.65, alpha = 2.0 * k - 1.0;
  const PolyOp H = diff_realization(Series::positive, k, Gen::H);
  // L_2^{(alpha)} = x^2/2 - (alpha+2) x + (alpha+1)(alpha+2)/2
  const Poly l2{0.5 * (alpha + 1.0) * (alpha + 2.0), -(alpha + 2.0), 0.5};
  const Poly out = H.apply(l2);
  REQUIRE(out.size() >= 3);
  const double ev = 2.0 * (2.0 + k);
  for (size_t i = 0; i < out.size(); ++i) {
    const double want = i < l2.size() ? ev * l2[i] : 0.0;
    CHECK(out[i] == doctest::Approx(want).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("polynomial operator algebra helpers") {
  const double k = 0.65;
  const PolyOp B = diff_realization(Series::positive, k, Gen::B);
  const PolyOp C = diff_realization(Series::positive, k, Gen::C);
  const PolyOp H = diff_realization(Series::positive, k, Gen::H);
  // [B, C] p = H p on a sample polynomial
  const Poly sample{1.0, -2.0, 0.5};
  const Poly bc = poly_op_compose(B, C).apply(sample);
  const Poly cb = poly_op_compose(C, B).apply(sample);
  const Poly hp = H.apply(sample);
  for (size_t i = 0; i < hp.size(); ++i) {
    const double lhs = (i < bc.size() ? bc[i] : 0.0) -
                       (i < cb.size() ? cb[i] : 0.0);
    CHECK(lhs == doctest::Approx(hp[i]).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("coupled Casimir: displayed operator equals the assembled one") {
  const double k1 = 0.6, k2 = 0.7;
  const Poly p{0.0, 1.0, 0.0, 2.0};  // x + 2x^3
  const Poly q{1.0, -1.0};           // 1 - x
  const BivarPoly a = delta_omega_apply(k1, k2, p, q);
  const BivarPoly b = delta_omega_composed(k1, k2, p, q);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].size() == b[i].size());
    for (size_t j = 0; j < a[i].size(); ++j)
      CHECK(a[i][j] == doctest::Approx(b[i][j]).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("reduced radial operator eigen-residuals") {
  CHECK(xi_residual(0.8, 0.6, 0.7, 1.5, 0.9) < 1e-6);
  CHECK(xi_residual(0.8, 0.6, 0.7, 0.0, 0.9) < 1e-8);
}
