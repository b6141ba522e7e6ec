#include <catch2/catch_amalgamated.hpp>

#include "regcat/gen_inverse.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace regcat;
using fixtures::q;

TEST_CASE("inner inverse", "[inner]") {
  CHECK(is_inner_inverse(Matrix{{2}}, Matrix{{q(1, 2)}}));
  CHECK(is_inner_inverse(fixtures::diag10(), fixtures::diag10()));
  CHECK(!is_inner_inverse(fixtures::nilpotent(), Matrix::zero(2, 2)));
  CHECK_THROWS_AS(is_inner_inverse(Matrix{{1, 2}}, Matrix{{1, 2}}), DimensionMismatch);
}

TEST_CASE("outer inverse", "[outer]") {
  CHECK(is_outer_inverse(Matrix{{2}}, Matrix{{q(1, 2)}}));
  CHECK(is_outer_inverse(fixtures::nilpotent(), Matrix::zero(2, 2)));
  CHECK(is_outer_inverse(Matrix{{1, 2}}, Matrix::zero(2, 1)));
  CHECK(!is_outer_inverse(fixtures::diag10(), Matrix::identity(2)));
  CHECK_THROWS_AS(is_outer_inverse(Matrix{{1, 2}}, Matrix::zero(1, 2)), DimensionMismatch);
}

TEST_CASE("inverse report carries a witness", "[report]") {
  auto ok = inverse_report(Matrix{{2}}, Matrix{{q(1, 2)}});
  CHECK(ok.is_reflexive);
  CHECK(!ok.witness_vector);

  auto bad = inverse_report(fixtures::nilpotent(), Matrix::zero(2, 2));
  CHECK(!bad.is_inner);
  CHECK(bad.is_outer);
  CHECK(!bad.is_reflexive);
  REQUIRE(bad.witness_vector);
  // f∘0∘f and f differ on e2.
  CHECK(*bad.witness_vector == Vector{0, 1});
  Vector w = *bad.witness_vector;
  CHECK(fixtures::nilpotent() * w != Vector{0, 0});

  auto outer_only = inverse_report(fixtures::diag10(), Matrix::identity(2));
  CHECK(outer_only.is_inner);
  CHECK(!outer_only.is_outer);
  CHECK(*outer_only.witness_vector == Vector{0, 1});
}

TEST_CASE("reflexive_from_inner", "[reflexive]") {
  CHECK(reflexive_from_inner(Matrix{{2}}, Matrix{{q(1, 2)}}) == Matrix{{q(1, 2)}});
  CHECK(reflexive_from_inner(fixtures::diag10(), Matrix::identity(2)) == fixtures::diag10());
  CHECK(reflexive_from_inner(Matrix{{1, 2}}, Matrix{{1}, {0}}) == Matrix{{1}, {0}});
  CHECK_THROWS_AS(reflexive_from_inner(fixtures::nilpotent(), Matrix::zero(2, 2)),
                  NotAnInnerInverse);
}

TEST_CASE("generalized_inverse with default complements", "[ginverse]") {
  CHECK(generalized_inverse(Matrix::identity(2)) == Matrix::identity(2));
  CHECK(generalized_inverse(fixtures::nilpotent()) == Matrix{{0, 0}, {1, 0}});
  CHECK(generalized_inverse(Matrix::zero(2, 3)) == Matrix::zero(3, 2));
  CHECK(generalized_inverse(Matrix(0, 0)) == Matrix(0, 0));

  // Ker [[1,2]] has RREF row (1,-1/2) with pivot in column 0, so the default M
  // is span{e2} and f* sends 1 to (0,1/2).
  Matrix f{{1, 2}};
  Matrix g = generalized_inverse(f);
  CHECK(g == Matrix{{0}, {q(1, 2)}});
  CHECK(f * g * f == f);
  CHECK(g * f * g == g);
}

TEST_CASE("generalized_inverse with explicit complements", "[ginverse]") {
  Matrix f{{1, 2}};
  CHECK(generalized_inverse(f, Subspace::span({{1, 0}}, 2)) == Matrix{{1}, {0}});

  Matrix column{{1}, {0}};
  Matrix g_default = generalized_inverse(column);
  Matrix g_tilted  = generalized_inverse(column, std::nullopt, Subspace::span({{1, 1}}, 2));
  CHECK(g_default == Matrix{{1, 0}});
  CHECK(g_tilted == Matrix{{1, -1}});
  CHECK(kernel(g_tilted) == Subspace::span({{1, 1}}, 2));

  CHECK_THROWS_AS(generalized_inverse(f, Subspace::span({{2, -1}}, 2)), NotADirectSum);
  CHECK_THROWS_AS(generalized_inverse(column, std::nullopt, Subspace::span({{3, 0}}, 2)),
                  NotADirectSum);
  CHECK_THROWS_AS(generalized_inverse(column, std::nullopt, Subspace::full(2)), NotADirectSum);
  CHECK_THROWS_AS(generalized_inverse(f, Subspace::span({{1, 0, 0}}, 3)), NotADirectSum);
}

TEST_CASE("range projectors", "[projectors]") {
  auto [pf, pg] = range_projectors(fixtures::diag10(), fixtures::diag10());
  CHECK(pf == fixtures::diag10());
  CHECK(pg == fixtures::diag10());

  auto [one, other] = range_projectors(Matrix{{2}}, Matrix{{q(1, 2)}});
  CHECK(one == Matrix{{1}});
  CHECK(other == Matrix{{1}});

  auto [p, r] = range_projectors(fixtures::nilpotent(), Matrix{{0, 0}, {1, 0}});
  CHECK(p == fixtures::diag10());
  CHECK(r == Matrix{{0, 0}, {0, 1}});

  CHECK_THROWS_AS(range_projectors(fixtures::diag10(), Matrix::identity(2)),
                  NotAGeneralizedInverse);
}

TEST_CASE("image and kernel report", "[subspaces]") {
  auto nil = lemma3_report(fixtures::nilpotent(), Matrix{{0, 0}, {1, 0}});
  CHECK(nil.all_passed());
  CHECK(nil.checks.size() == 7);

  Matrix a = fixtures::shear();
  auto inv = lemma3_report(a, inverse(a));
  CHECK(inv.all_passed());
  CHECK(inv.kernel_f.dim() == 0);
  CHECK(inv.kernel_g.dim() == 0);

  auto idem = lemma3_report(fixtures::diag10(), fixtures::diag10());
  CHECK(idem.all_passed());
  CHECK(idem.image_f == Subspace::span({{1, 0}}, 2));
  CHECK(idem.image_g == Subspace::span({{1, 0}}, 2));
  CHECK(idem.kernel_f == Subspace::span({{0, 1}}, 2));

  CHECK_THROWS_AS(lemma3_report(fixtures::nilpotent(), Matrix::zero(2, 2)),
                  NotAGeneralizedInverse);
}

TEST_CASE("generalized inverse laws on random matrices", "[property]") {
  testing::Engine rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix f = testing::corpus_matrix(rng);
    Matrix g = generalized_inverse(f);
    REQUIRE(oracle::multiply(oracle::multiply(f, g), f) == f);
    REQUIRE(oracle::multiply(oracle::multiply(g, f), g) == g);
    REQUIRE(image(g) == complement(kernel(f)));
    REQUIRE(kernel(g) == complement(image(f)));

    auto [pf, pg] = range_projectors(f, g);
    REQUIRE(pf * pf == pf);
    REQUIRE(pf * f == f);
    REQUIRE(f * pg == f);
    REQUIRE(pg * pg == pg);
    REQUIRE(pg * g == g);
    REQUIRE(g * pf == g);

    auto report = lemma3_report(f, g);
    REQUIRE(report.all_passed());
    REQUIRE(report.image_g.dim() + report.kernel_f.dim() == f.domain_dim());
  }
}

TEST_CASE("explicit complements give the unique inverse with that image and kernel",
          "[property]") {
  testing::Engine rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix f = testing::corpus_matrix(rng);
    // Tilt the default complements by maps into Ker f and Im f.
    Subspace ker = kernel(f);
    Subspace im  = image(f);
    Matrix shift_x = Matrix::identity(f.cols())
                     + projector_onto(ker, complement(ker))
                         * testing::dense_matrix(rng, f.cols(), f.cols())
                         * projector_onto(complement(ker), ker);
    Matrix shift_y = Matrix::identity(f.rows())
                     + projector_onto(im, complement(im))
                         * testing::dense_matrix(rng, f.rows(), f.rows())
                         * projector_onto(complement(im), im);
    Subspace m = image(shift_x * complement(ker).basis().transpose());
    Subspace n = image(shift_y * complement(im).basis().transpose());
    REQUIRE(is_direct_sum(m, ker));
    REQUIRE(is_direct_sum(im, n));
    Matrix g1 = generalized_inverse(f, m, n);
    Matrix g2 = generalized_inverse(f, m, n);
    REQUIRE(g1 == g2);
    REQUIRE(is_generalized_inverse(f, g1));
    REQUIRE(image(g1) == m);
    REQUIRE(kernel(g1) == n);
  }
}

TEST_CASE("reflexive_from_inner is idempotent", "[property]") {
  testing::Engine rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix f = testing::corpus_matrix(rng);
    Matrix g = generalized_inverse(f);
    Matrix h = testing::dense_matrix(rng, f.cols(), f.rows());
    Matrix inner = g + (Matrix::identity(f.cols()) - g * f) * h;
    REQUIRE(is_inner_inverse(f, inner));
    Matrix reflexive = reflexive_from_inner(f, inner);
    REQUIRE(is_generalized_inverse(f, reflexive));
    REQUIRE(reflexive_from_inner(f, reflexive) == reflexive);
  }
}
