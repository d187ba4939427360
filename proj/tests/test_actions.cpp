#include <doctest.h>

#include "invtopos/actions.hpp"
#include "invtopos/fixtures.hpp"

using namespace invtopos;

TEST_CASE("fixture actions validate") {
  for (auto const& name : fixtures::action_names()) {
    INFO(name);
    auto a = fixtures::action_by_name(name);
    CHECK(a.carrier_size() > 0);
  }
}

TEST_CASE("validate_action catches a prehomomorphism violation") {
  auto sl3 = fixtures::sl3();
  // e, f, g all act as the identity on {1,2} except g sends 1 to 2: then
  // (ef).1 = g.1 = 2 but e.(f.1) = 1.
  std::vector<std::vector<int>> act = {{0, 1}, {0, 1}, {1, -1}};
  try {
    PartialAction::validate(sl3, {"1", "2"}, act);
    FAIL("expected rejection");
  } catch (ValidationError const& err) {
    CHECK(err.code() == "PrehomLawViolation");
  }
}

TEST_CASE("validate_action rejects the meet action on a chain") {
  auto ch3 = fixtures::ch3();
  try {
    PartialAction::validate(ch3, {"c0", "c1", "c2"}, fixtures::ch3_meet_tables());
    FAIL("expected rejection");
  } catch (ValidationError const& err) {
    CHECK(err.code() == "NotInjective");
  }
}

TEST_CASE("validate_action enforces effectiveness unless asked not to") {
  auto z3 = fixtures::z3();
  std::vector<std::vector<int>> act(3, std::vector<int>(2, -1));
  for (int g = 0; g < 3; ++g) {
    act[g][0] = 0;  // all of Z3 fixes point 1; point 2 uncovered
  }
  try {
    PartialAction::validate(z3, {"1", "2"}, act);
    FAIL("expected rejection");
  } catch (ValidationError const& err) {
    CHECK(err.code() == "NotEffective");
    CHECK(err.witness().parts == std::vector<std::string>{"2"});
  }
  auto relaxed = PartialAction::validate(z3, {"1", "2"}, act, true);
  CHECK(relaxed.carrier_size() == 2);
}

TEST_CASE("is_strict") {
  auto ex33 = fixtures::ex33_action();
  auto verdict = is_strict(ex33);
  CHECK_FALSE(verdict.value);
  // Witness is an idempotent pair whose composite has too small a domain.
  CHECK(verdict.witness->parts.size() == 2);

  CHECK(is_strict(fixtures::z3_regular()).value);
  CHECK(is_strict(fixtures::b2_natural_action()).value);
  CHECK(is_strict(fixtures::i2_natural_action()).value);

  // Strictness via idempotents agrees with the full homomorphism check.
  for (auto const& name : fixtures::action_names()) {
    auto a = fixtures::action_by_name(name);
    auto const& s = a.sgp();
    bool full_hom = true;
    for (int u = 0; u < s.size() && full_hom; ++u) {
      for (int v = 0; v < s.size() && full_hom; ++v) {
        for (int x = 0; x < a.carrier_size() && full_hom; ++x) {
          int const vx = a.apply(v, x);
          int const lhs = a.apply(s.mul(u, v), x);
          int const rhs = vx < 0 ? -1 : a.apply(u, vx);
          full_hom = lhs == rhs;
        }
      }
    }
    INFO(name);
    CHECK(is_strict(a).value == full_hom);
  }
}

TEST_CASE("is_connected") {
  auto ex33 = fixtures::ex33_action();
  auto verdict = is_connected(ex33);
  CHECK_FALSE(verdict.value);
  CHECK(verdict.witness->parts == std::vector<std::string>{"2"});

  // Strict actions are connected; monoid actions are connected.
  CHECK(is_connected(fixtures::z3_regular()).value);
  CHECK(is_connected(fixtures::b2_natural_action()).value);
  CHECK(is_connected(fixtures::i2_natural_action()).value);
  CHECK(is_connected(fixtures::sl3_monoid_ex33()).value);

  for (auto const& name : fixtures::action_names()) {
    auto a = fixtures::action_by_name(name);
    if (is_strict(a).value) {
      INFO(name);
      CHECK(is_connected(a).value);
    }
  }
}

TEST_CASE("is_transitive") {
  CHECK(is_transitive(fixtures::z3_regular()).value);
  CHECK(is_transitive(fixtures::b2_natural_action()).value);
  auto twice = fixtures::z3_double();
  auto verdict = is_transitive(twice);
  CHECK_FALSE(verdict.value);
  REQUIRE(verdict.witness.has_value());
}

TEST_CASE("is_free") {
  CHECK(is_free(fixtures::z3_regular()).value);
  CHECK(is_free(fixtures::b2_natural_action()).value);
  CHECK(is_free(fixtures::sl3_point_action()).value);
  CHECK_FALSE(is_free(fixtures::z3_onepoint()).value);
}

TEST_CASE("is_torsor") {
  CHECK(is_torsor(fixtures::z3_regular()));
  CHECK(is_torsor(fixtures::b2_natural_action()));
  CHECK(is_torsor(fixtures::i2_natural_action()));
  CHECK_FALSE(is_torsor(fixtures::z3_onepoint()));
  try {
    is_torsor(fixtures::ex33_action());
    FAIL("expected NotStrict");
  } catch (ValidationError const& err) {
    CHECK(err.code() == "NotStrict");
  }
}

TEST_CASE("check_morphism") {
  auto reg = fixtures::z3_regular();
  std::vector<int> identity = {0, 1, 2};
  CHECK(check_morphism(reg, reg, identity).value);

  // Folding two disjoint copies onto one is equivariant.
  auto twice = fixtures::z3_double();
  std::vector<int> fold = {0, 1, 2, 0, 1, 2};
  CHECK(check_morphism(twice, reg, fold).value);

  // Collapsing the B2 carrier is not.
  auto b2a = fixtures::b2_natural_action();
  std::vector<int> collapse = {0, 0};
  auto verdict = check_morphism(b2a, b2a, collapse);
  CHECK_FALSE(verdict.value);
}

TEST_CASE("free and transitive are invariant under carrier relabeling") {
  auto b2a = fixtures::b2_natural_action();
  // Swap the two carrier points.
  std::vector<std::vector<int>> act(b2a.sgp().size(), std::vector<int>(2, -1));
  for (int s = 0; s < b2a.sgp().size(); ++s) {
    for (int x = 0; x < 2; ++x) {
      int const y = b2a.apply(s, 1 - x);
      act[s][x] = y < 0 ? -1 : 1 - y;
    }
  }
  auto swapped = PartialAction::validate(b2a.sgp_ptr(), {"1", "2"}, act);
  CHECK(is_free(swapped).value == is_free(b2a).value);
  CHECK(is_transitive(swapped).value == is_transitive(b2a).value);
  CHECK(is_strict(swapped).value == is_strict(b2a).value);
}

TEST_CASE("symmetric inverse semigroup") {
  auto i2 = symmetric_inverse(2);
  CHECK(i2.sgp->size() == 7);
  CHECK(i2.sgp->idempotents().size() == 4);

  auto i3 = symmetric_inverse(3);
  CHECK(i3.sgp->size() == 34);  // sum_k C(3,k)^2 k!

  // The natural action is by the elements themselves.
  auto a = i2.natural_action();
  for (int s = 0; s < i2.sgp->size(); ++s) {
    CHECK(a.table()[s] == i2.graphs[s]);
  }
}

TEST_CASE("enumerate_morphisms finds exactly the equivariant maps") {
  auto reg = fixtures::z3_regular();
  auto all = enumerate_morphisms(reg, reg);
  // Morphisms of the regular action = right translations.
  CHECK(all.size() == 3);
  for (auto const& m : all) {
    CHECK(check_morphism(reg, reg, m).value);
  }
}
