#include <doctest.h>

#include "invtopos/fixtures.hpp"
#include "invtopos/functor_tools.hpp"
#include "invtopos/phi_psi.hpp"

using namespace invtopos;

namespace {

// F on L(SL3) with F(e) = {x}, F(f) = {y}, F(g) = one or two elements all
// mapped onto x and y. The one-element version is torsion-free, the
// two-element version is not.
SetFunctor sl3_span_functor(int g_size) {
  auto logan = build_logan(fixtures::sl3());
  auto const& sl3 = logan->sgp();
  int const e = *sl3.index("e");
  int const f = *sl3.index("f");
  int const g = *sl3.index("g");

  std::vector<std::vector<std::string>> obj(3);
  obj[logan->object_of(e)] = {"x"};
  obj[logan->object_of(f)] = {"y"};
  obj[logan->object_of(g)] = g_size == 1 ? std::vector<std::string>{"z"}
                                         : std::vector<std::string>{"z1", "z2"};

  std::vector<std::vector<int>> maps(logan->arrow_count());
  for (int a = 0; a < logan->arrow_count(); ++a) {
    auto const& arr = logan->cat().arrow(a);
    if (a == logan->cat().identity(arr.src)) {
      maps[a].resize(obj[arr.src].size());
      std::iota(maps[a].begin(), maps[a].end(), 0);
    } else {
      maps[a].assign(obj[arr.src].size(), 0);  // non-identity targets are singletons
    }
  }
  return SetFunctor::validate(logan, std::move(obj), std::move(maps));
}

}  // namespace

TEST_CASE("validate_functor") {
  auto logan = build_logan(fixtures::sl3());
  CHECK(constant_singleton(logan).total_size() == 3);
  CHECK_NOTHROW(phi(fixtures::ex33_action()));

  // Break composition on L(CH2): send the inclusion arrow to the wrong
  // element of a 2-element set at the top.
  auto ch2 = build_logan(fixtures::ch2());
  auto const& s = ch2->sgp();
  int const e = *s.index("e");
  int const g = *s.index("g");
  std::vector<std::vector<std::string>> obj(2);
  obj[ch2->object_of(e)] = {"u", "v"};
  obj[ch2->object_of(g)] = {"w"};
  std::vector<std::vector<int>> maps(ch2->arrow_count());
  maps[ch2->arrow_index(e, e)] = {0, 1};
  maps[ch2->arrow_index(g, g)] = {0};
  maps[ch2->arrow_index(e, g)] = {1};
  CHECK_NOTHROW(SetFunctor::validate(ch2, obj, maps));

  maps[ch2->arrow_index(e, e)] = {1, 0};  // no longer the identity
  try {
    SetFunctor::validate(ch2, obj, maps);
    FAIL("expected rejection");
  } catch (ValidationError const& err) {
    CHECK(err.code() == "IdentityViolation");
  }
}

TEST_CASE("validate_functor flags a broken composite") {
  // On L(Z3) send both generators to the same transposition: then
  // F(a)F(a) != F(b) even though identities are fine.
  auto z3 = fixtures::z3();
  auto logan = build_logan(z3);
  int const one = z3->idempotents()[0];
  std::vector<std::vector<std::string>> obj = {{"x", "y", "z"}};
  std::vector<std::vector<int>> maps(logan->arrow_count());
  maps[logan->arrow_index(one, *z3->index("1"))] = {0, 1, 2};
  maps[logan->arrow_index(one, *z3->index("a"))] = {1, 0, 2};
  maps[logan->arrow_index(one, *z3->index("b"))] = {1, 0, 2};
  try {
    SetFunctor::validate(logan, obj, maps);
    FAIL("expected rejection");
  } catch (ValidationError const& err) {
    CHECK(err.code() == "CompositionViolation");
  }
}

TEST_CASE("category of elements sizes") {
  auto logan = build_logan(fixtures::sl3());
  auto el = category_of_elements(constant_singleton(logan));
  CHECK(el.cat.object_count() == 3);
  CHECK(el.cat.arrow_count() == 5);
  CHECK(el.cat.check().value);

  auto span = sl3_span_functor(1);
  auto el_span = category_of_elements(span);
  CHECK(el_span.cat.object_count() == 3);
  CHECK(el_span.cat.arrow_count() == 5);

  auto reg = phi(fixtures::z3_regular());
  auto el_reg = category_of_elements(reg);
  CHECK(el_reg.cat.object_count() == 3);
  CHECK(el_reg.cat.arrow_count() == 9);
  CHECK(el_reg.cat.check().value);

  // Object count is the total size of the functor, always.
  for (auto const& name : fixtures::action_names()) {
    auto f = phi(fixtures::action_by_name(name));
    CHECK(category_of_elements(f).cat.object_count() == f.total_size());
  }
}

TEST_CASE("is_torsion_free") {
  CHECK(is_torsion_free(sl3_span_functor(1)).value);

  auto doubled = sl3_span_functor(2);
  auto verdict = is_torsion_free(doubled);
  CHECK_FALSE(verdict.value);
  CHECK(verdict.witness->parts ==
        std::vector<std::string>{"g", "z1", "z2"});

  // Any functor on L(G) for a group G is torsion-free.
  CHECK(is_torsion_free(phi(fixtures::z3_regular())).value);
  CHECK(is_torsion_free(phi(fixtures::z3_double())).value);
}

TEST_CASE("is_directed") {
  CHECK(is_directed(phi(fixtures::z3_regular())).value);

  auto two = is_directed(phi(fixtures::z3_double()));
  CHECK_FALSE(two.value);
  CHECK(two.witness->code == "F2");

  auto logan = build_logan(fixtures::sl3());
  std::vector<std::vector<std::string>> empty_obj(3);
  std::vector<std::vector<int>> empty_maps(logan->arrow_count());
  auto empty = SetFunctor::validate(logan, empty_obj, empty_maps);
  auto verdict = is_directed(empty);
  CHECK_FALSE(verdict.value);
  CHECK(verdict.witness->code == "F1");
}

TEST_CASE("is_filtered") {
  CHECK(is_filtered(phi(fixtures::z3_regular())).value);
  CHECK(is_filtered(phi(fixtures::b2_natural_action())).value);

  // SL3 acting strictly on {1,2} with e total and f = g partial at 1.
  auto sl3 = fixtures::sl3();
  std::vector<std::vector<int>> act = {{0, 1}, {0, -1}, {0, -1}};
  auto a = PartialAction::validate(sl3, {"1", "2"}, act);
  CHECK(is_strict(a).value);
  CHECK_FALSE(is_filtered(phi(a)).value);  // not even directed: 2 unreachable

  CHECK(is_filtered(phi(fixtures::sl3_point_action())).value);
}

TEST_CASE("preserves_pullbacks") {
  CHECK(preserves_pullbacks(phi(fixtures::z3_regular())));
  CHECK(preserves_pullbacks(phi(fixtures::b2_natural_action())));

  // The coreflector of the running example happens to be strict: the three
  // classes make the e- and f-domains intersect exactly in the g-domain.
  CHECK(is_strict(psi(phi(fixtures::ex33_action()))).value);
  CHECK(preserves_pullbacks(phi(fixtures::ex33_action())));

  // The diamond one-point action stays non-strict after the coreflector:
  // e and f share their one-point domain but the meet acts nowhere.
  CHECK_FALSE(preserves_pullbacks(phi(fixtures::d4_diag_action())));

  try {
    preserves_pullbacks(sl3_span_functor(2));
    FAIL("expected NotTorsionFree");
  } catch (ValidationError const& err) {
    CHECK(err.code() == "NotTorsionFree");
  }
}

TEST_CASE("filtered implies directed and pullback preservation") {
  std::vector<std::pair<std::string, SetFunctor>> functors;
  for (auto const& name : fixtures::action_names()) {
    functors.emplace_back(name, phi(fixtures::action_by_name(name)));
  }
  functors.emplace_back("terminal", constant_singleton(build_logan(fixtures::sl3())));
  functors.emplace_back("span", sl3_span_functor(1));

  for (auto const& [name, f] : functors) {
    if (is_filtered(f).value) {
      INFO(name);
      CHECK(is_directed(f).value);
      CHECK(is_torsion_free(f).value);
      CHECK(preserves_pullbacks(f));
    }
  }
}

TEST_CASE("enumerate_transformations on group functors") {
  auto reg = phi(fixtures::z3_regular());
  auto all = enumerate_transformations(reg, reg);
  CHECK(all.size() == 3);  // right translations
  for (auto const& t : all) {
    CHECK(check_transformation(reg, reg, t).value);
  }
}
