#include <catch2/catch_amalgamated.hpp>

#include "regcat/tqft.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace regcat;

namespace {

  Boundary a() { return Boundary::of({"a"}); }
  Boundary b() { return Boundary::of({"b"}); }

  CobordismSignature signature() {
    return CobordismSignature(
        {"a", "b"},
        {
            {"cyl_a", a(), a(), std::nullopt, true},
            {"cyl_b", b(), b(), std::nullopt, true},
            {"collapse", a(), Boundary(), "expand", false},
            {"expand", Boundary(), a(), "collapse", false},
            {"m", a(), b(), "m_op", false},
            {"m_op", b(), a(), "m", false},
            {"merge", a() + b(), b(), std::nullopt, false},
        });
  }

  TqftAssignment assignment(Matrix const& m, Matrix const& m_op) {
    TqftAssignment t;
    t.label_dims = {{"a", 2}, {"b", 2}};
    t.generator_maps = {
        {"cyl_a", Matrix::identity(2)},
        {"cyl_b", Matrix::identity(2)},
        {"collapse", Matrix{{1, 0}}},
        {"expand", Matrix{{1}, {0}}},
        {"m", m},
        {"m_op", m_op},
        {"merge", Matrix::zero(2, 4)},
    };
    return t;
  }

  TqftAssignment reversible() {
    return assignment(fixtures::shear(), inverse(fixtures::shear()));
  }

}  // namespace

TEST_CASE("boundaries", "[boundary]") {
  CHECK(Boundary().str() == "∅");
  CHECK((a() + b().dual()).str() == "a ⊔ b*");
  CHECK(a().dual().dual() == a());
  CHECK(a() + Boundary() == a());
  CHECK(a() + b() != b() + a());
  CHECK_THROWS_AS(Boundary({{"a", 0}}), InvariantViolation);
}

TEST_CASE("signature validation", "[signature]") {
  CHECK_NOTHROW(signature());
  CHECK_THROWS_AS(
      CobordismSignature({"a"}, {{"g", a(), a(), std::nullopt}, {"g", a(), a(), std::nullopt}}),
      DuplicateName);
  CHECK_THROWS_AS(CobordismSignature({"a"}, {{"g", a(), b(), std::nullopt}}), UnknownName);
  CHECK_THROWS_AS(CobordismSignature({"a", "b"}, {{"c", a(), b(), std::nullopt, true}}),
                  InvariantViolation);
  CHECK_THROWS_AS(CobordismSignature({"a", "b"}, {{"g", a(), b(), "h"}, {"h", a(), b(), "g"}}),
                  InvariantViolation);
  CHECK_THROWS_AS(CobordismSignature({"a", "b"},
                                     {{"g", a(), b(), "h"}, {"h", b(), a(), std::nullopt}}),
                  InvariantViolation);
  CHECK_THROWS_AS(CobordismSignature({"a"}, {{"g", a(), a(), "nobody"}}), UnknownName);
}

TEST_CASE("words and gluing", "[interaction]") {
  auto sig = signature();
  auto m = make_interaction(sig, a(), b(), {"cyl_a", "m", "cyl_b", "cyl_b"});
  CHECK(m.body == std::vector<std::string>{"m"});
  CHECK(make_interaction(sig, a(), a(), {"cyl_a", "cyl_a"}) == cylinder(a()));

  auto round = glue(generator_interaction(sig, "m"), generator_interaction(sig, "m_op"));
  CHECK(round.incoming == a());
  CHECK(round.outgoing == a());
  CHECK(round.body == std::vector<std::string>{"m", "m_op"});

  auto through_empty = glue(generator_interaction(sig, "collapse"), generator_interaction(sig, "expand"));
  CHECK(through_empty.incoming == a());
  CHECK(through_empty.outgoing == a());
  auto closed = glue(generator_interaction(sig, "expand"), generator_interaction(sig, "collapse"));
  CHECK(closed.incoming.empty());
  CHECK(closed.outgoing.empty());

  CHECK(glue(cylinder(a()), m) == m);
  CHECK(glue(m, cylinder(b())) == m);

  CHECK_THROWS_AS(make_interaction(sig, a(), b(), {"m_op"}), BoundaryMismatch);
  CHECK_THROWS_AS(make_interaction(sig, a(), a(), {"m"}), BoundaryMismatch);
  CHECK_THROWS_AS(make_interaction(sig, a(), b(), {"zap"}), UnknownName);
  CHECK_THROWS_AS(make_interaction(sig, Boundary::of({"c"}), b(), {"m"}), UnknownName);
  CHECK_THROWS_AS(glue(m, m), BoundaryMismatch);
  try {
    glue(m, generator_interaction(sig, "merge"));
    FAIL("expected BoundaryMismatch");
  } catch (BoundaryMismatch const& e) {
    CHECK(std::string(e.what()).find("expected b, got a ⊔ b") != std::string::npos);
  }
}

TEST_CASE("opposites", "[interaction]") {
  auto sig = signature();
  auto round = make_interaction(sig, a(), a(), {"m", "m_op", "collapse", "expand"});
  auto op = opposite(sig, round);
  CHECK(op.body == std::vector<std::string>{"collapse", "expand", "m", "m_op"});
  CHECK(opposite(sig, op) == round);
  CHECK(opposite(sig, cylinder(b())) == cylinder(b()));
  CHECK_THROWS_AS(opposite(sig, generator_interaction(sig, "merge")), NoOppositeDeclared);
}

TEST_CASE("evaluation", "[evaluate]") {
  auto sig = signature();
  auto tqft = reversible();
  CHECK_NOTHROW(validate_assignment(sig, tqft));
  CHECK(evaluate(tqft, cylinder(a())) == Matrix::identity(2));
  CHECK(evaluate(tqft, cylinder(Boundary())) == Matrix{{1}});
  CHECK(evaluate(tqft, make_interaction(sig, a(), a(), {"collapse", "expand"})) == fixtures::diag10());
  CHECK(evaluate(tqft, glue(generator_interaction(sig, "expand"), generator_interaction(sig, "collapse")))
        == Matrix{{1}});

  auto skew = assignment(Matrix{{1, 2}, {0, 1}}, Matrix{{0, 1}, {1, 0}});
  // First letter applied first: m_op ∘ m.
  CHECK(evaluate(skew, make_interaction(sig, a(), a(), {"m", "m_op"})) == Matrix{{0, 1}, {1, 2}});

  TqftAssignment dims;
  dims.label_dims = {{"a", 2}, {"b", 3}};
  CHECK(boundary_dim(dims, a() + b()) == 6);
  CHECK(boundary_dim(dims, a() + a().dual()) == 4);
  CHECK(boundary_dim(dims, Boundary()) == 1);
}

TEST_CASE("assignment errors", "[evaluate]") {
  auto sig = signature();
  TqftAssignment missing_label = reversible();
  missing_label.label_dims.erase("b");
  CHECK_THROWS_AS(validate_assignment(sig, missing_label), UnassignedLabel);
  CHECK_THROWS_AS(evaluate(missing_label, generator_interaction(sig, "m")), UnassignedLabel);

  TqftAssignment missing_map = reversible();
  missing_map.generator_maps.erase("m");
  CHECK_THROWS_AS(validate_assignment(sig, missing_map), UnassignedGenerator);
  CHECK_THROWS_AS(evaluate(missing_map, generator_interaction(sig, "m")), UnassignedGenerator);

  TqftAssignment wrong_shape = reversible();
  wrong_shape.generator_maps["m"] = Matrix::identity(3);
  CHECK_THROWS_AS(validate_assignment(sig, wrong_shape), ShapeMismatch);
  CHECK_THROWS_AS(evaluate(wrong_shape, generator_interaction(sig, "m")), ShapeMismatch);

  TqftAssignment bent_cylinder = reversible();
  bent_cylinder.generator_maps["cyl_a"] = fixtures::diag10();
  CHECK_THROWS_AS(validate_assignment(sig, bent_cylinder), ShapeMismatch);
}

TEST_CASE("interaction cycles", "[cocycle]") {
  auto sig = signature();
  std::vector<Interaction> pair{generator_interaction(sig, "m"), generator_interaction(sig, "m_op")};

  auto rev = check_n_regular_tqft(reversible(), pair);
  CHECK(rev.result.regular);
  CHECK(rev.trivial);
  CHECK(rev.cocycle.objects == std::vector<std::string>{"B1", "B2"});
  CHECK(rev.cocycle.arrows == std::vector<std::string>{"M1", "M2"});

  auto idem = check_n_regular_tqft(assignment(fixtures::diag10(), fixtures::diag10()), pair);
  CHECK(idem.result.regular);
  CHECK(!idem.trivial);
  CHECK(idem.result.obstruction->endomaps == std::vector<Matrix>{fixtures::diag10(), fixtures::diag10()});

  auto nil = check_n_regular_tqft(assignment(fixtures::nilpotent(), Matrix::identity(2)), pair);
  CHECK(!nil.result.regular);
  CHECK(!nil.trivial);
  CHECK(nil.result.failing_index == 1u);

  std::vector<Interaction> via_empty{generator_interaction(sig, "collapse"),
                                     generator_interaction(sig, "expand")};
  auto e = check_n_regular_tqft(reversible(), via_empty);
  CHECK(e.result.regular);
  CHECK(!e.trivial);
  CHECK(e.category.object("B2").dim == 1);
  CHECK(e.result.obstruction->endomaps == std::vector<Matrix>{fixtures::diag10(), Matrix{{1}}});

  auto single = check_n_regular_tqft(reversible(), {make_interaction(sig, a(), a(), {"m", "m_op"})});
  CHECK(single.trivial);

  CHECK_THROWS_AS(check_n_regular_tqft(reversible(), {generator_interaction(sig, "m")}),
                  BoundaryMismatch);
  CHECK_THROWS_AS(check_n_regular_tqft(reversible(), {}), PreconditionViolated);
}

TEST_CASE("evaluation is functorial", "[property]") {
  auto sig = signature();
  testing::Engine rng(71);
  std::vector<std::string> from_a{"m", "collapse", "cyl_a"};
  std::vector<std::string> from_b{"m_op", "cyl_b"};
  std::vector<std::string> from_empty{"expand"};
  for (int trial = 0; trial < 100; ++trial) {
    auto tqft = assignment(testing::dense_matrix(rng, 2, 2), testing::dense_matrix(rng, 2, 2));
    tqft.generator_maps["collapse"] = testing::dense_matrix(rng, 1, 2);
    tqft.generator_maps["expand"]   = testing::dense_matrix(rng, 2, 1);

    auto random_word = [&](Boundary start, std::size_t len) {
      std::vector<std::string> word;
      Boundary at = start;
      for (std::size_t k = 0; k < len; ++k) {
        auto const& options = at == a() ? from_a : at == b() ? from_b : from_empty;
        auto tag = options[testing::uniform(rng, 0, options.size() - 1)];
        word.push_back(tag);
        at = sig.generator(tag).outgoing;
      }
      return make_interaction(sig, start, at, word);
    };

    auto x = random_word(a(), testing::uniform(rng, 0, 4));
    auto y = random_word(x.outgoing, testing::uniform(rng, 0, 4));
    auto z = random_word(y.outgoing, testing::uniform(rng, 0, 4));
    Matrix ex = evaluate(tqft, x), ey = evaluate(tqft, y), ez = evaluate(tqft, z);
    REQUIRE(evaluate(tqft, glue(x, y)) == oracle::multiply(ey, ex));
    REQUIRE(evaluate(tqft, glue(glue(x, y), z)) == evaluate(tqft, glue(x, glue(y, z))));
    REQUIRE(evaluate(tqft, glue(cylinder(x.incoming), x)) == ex);
    REQUIRE(evaluate(tqft, glue(x, cylinder(x.outgoing))) == ex);
    REQUIRE(opposite(sig, opposite(sig, x)) == x);
  }
}
