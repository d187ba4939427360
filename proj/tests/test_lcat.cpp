#include <doctest.h>

#include "invtopos/fixtures.hpp"
#include "invtopos/lcat.hpp"

using namespace invtopos;

TEST_CASE("build_logan object and arrow counts") {
  auto z3 = build_logan(fixtures::z3());
  CHECK(z3->object_count() == 1);
  CHECK(z3->arrow_count() == 3);

  auto sl3 = build_logan(fixtures::sl3());
  CHECK(sl3->object_count() == 3);
  CHECK(sl3->arrow_count() == 5);

  auto ch2 = build_logan(fixtures::ch2());
  CHECK(ch2->object_count() == 2);
  CHECK(ch2->arrow_count() == 3);

  // Arrow count = sum over s of |{f in E : f >= r(s)}|.
  for (auto s : {fixtures::z3(), fixtures::sl3(), fixtures::b2(), fixtures::i2()}) {
    auto logan = build_logan(s);
    int expected = 0;
    for (int elt = 0; elt < s->size(); ++elt) {
      for (int f : s->idempotents()) {
        expected += s->natural_leq(s->r(elt), f) ? 1 : 0;
      }
    }
    CHECK(logan->arrow_count() == expected);
  }
}

TEST_CASE("logan categories satisfy the category laws") {
  for (auto name : fixtures::semigroup_names()) {
    auto logan = build_logan(fixtures::semigroup_by_name(name));
    auto verdict = logan->cat().check();
    INFO(name, ": ", verdict.witness ? format_witness(*verdict.witness) : "");
    CHECK(verdict.value);
  }
}

TEST_CASE("arrow invariants: endpoints and factorization") {
  for (auto sname : {"Z3", "SL3", "B2", "I2"}) {
    auto sgp = fixtures::semigroup_by_name(sname);
    auto logan = build_logan(sgp);
    auto const& s = *sgp;
    for (int a = 0; a < logan->arrow_count(); ++a) {
      auto const [f, elt] = logan->arrow_pair(a);
      CHECK(logan->cat().arrow(a).src == logan->object_of(s.d(elt)));
      CHECK(logan->cat().arrow(a).tgt == logan->object_of(f));
      CHECK(s.natural_leq(s.r(elt), f));

      // (f, s) = (f, r(s)) o (r(s), s), the second factor invertible.
      int const iso = logan->arrow_index(s.r(elt), elt);
      int const incl = logan->arrow_index(f, s.r(elt));
      REQUIRE(iso >= 0);
      REQUIRE(incl >= 0);
      CHECK(logan->cat().compose(incl, iso) == a);

      int const iso_inv = logan->arrow_index(s.d(elt), s.inv(elt));
      REQUIRE(iso_inv >= 0);
      CHECK(logan->cat().compose(iso_inv, iso) ==
            logan->cat().identity(logan->object_of(s.d(elt))));
      CHECK(logan->cat().compose(iso, iso_inv) ==
            logan->cat().identity(logan->object_of(s.r(elt))));
    }
  }
}

TEST_CASE("hom sets") {
  auto sl3 = fixtures::sl3();
  auto logan = build_logan(sl3);
  int const e = *sl3->index("e");
  int const f = *sl3->index("f");
  int const g = *sl3->index("g");

  auto ge = logan->hom_set(g, e);
  REQUIRE(ge.size() == 1);
  CHECK(logan->arrow_pair(ge[0]) == std::pair<int, int>{e, g});

  CHECK(logan->hom_set(e, g).empty());
  CHECK(logan->hom_set(f, f).size() == 1);

  auto z3 = fixtures::z3();
  auto lz3 = build_logan(z3);
  int const one = *z3->index("1");
  CHECK(lz3->hom_set(one, one).size() == 3);
}

TEST_CASE("hom_set rejects non-idempotent objects") {
  auto b2 = fixtures::b2();
  auto logan = build_logan(b2);
  try {
    logan->hom_set(*b2->index("a"), *b2->index("e1"));
    FAIL("expected rejection");
  } catch (ValidationError const& err) {
    CHECK(err.code() == "UnknownObject");
  }
}

TEST_CASE("L of a semilattice is its order poset; L of a group is the group") {
  for (auto sname : {"SL3", "CH2", "CH3", "SL31"}) {
    auto sgp = fixtures::semigroup_by_name(sname);
    auto logan = build_logan(sgp);
    // At most one arrow between any two objects, present iff src <= tgt.
    for (int e : sgp->idempotents()) {
      for (int f : sgp->idempotents()) {
        CHECK(logan->hom_set(e, f).size() ==
              (sgp->natural_leq(e, f) ? 1u : 0u));
      }
    }
  }

  auto sl3 = fixtures::sl3();
  auto order = poset_category(sl3->names(), [&](int a, int b) {
    return sl3->natural_leq(a, b);
  });
  CHECK(order.check().value);
  CHECK(order.object_count() == 3);
  CHECK(order.arrow_count() == 5);

  auto z3 = fixtures::z3();
  auto lz3 = build_logan(z3);
  // One object; arrows compose as the group does.
  CHECK(lz3->object_count() == 1);
  for (int s = 0; s < z3->size(); ++s) {
    for (int t = 0; t < z3->size(); ++t) {
      int const one = z3->idempotents()[0];
      int const a = lz3->arrow_index(one, s);
      int const b = lz3->arrow_index(one, t);
      CHECK(lz3->cat().compose(a, b) == lz3->arrow_index(one, z3->mul(s, t)));
    }
  }
}

TEST_CASE("check_category flags a broken identity") {
  // Two objects, identities swapped on purpose: id arrows have wrong
  // endpoints.
  std::vector<CatArrow> arrows = {{0, 0, "id0"}, {1, 1, "id1"}};
  std::vector<std::vector<int>> compose = {{0, -1}, {-1, 1}};
  FiniteCategory broken({"x", "y"}, arrows, {1, 0}, compose);
  auto verdict = broken.check();
  CHECK_FALSE(verdict.value);
  CHECK(verdict.witness->code == "BadIdentity");
}

TEST_CASE("DOT export mentions every arrow label") {
  auto logan = build_logan(fixtures::sl3());
  auto dot = logan->dot();
  CHECK(dot.find("(e,g)") != std::string::npos);
  CHECK(dot.find("(f,g)") != std::string::npos);
  CHECK(dot.find("digraph") != std::string::npos);
}
