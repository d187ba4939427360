#include <doctest.h>

#include <set>

#include "invtopos/fixtures.hpp"
#include "invtopos/phi_psi.hpp"
#include "invtopos/presheaf_tensor.hpp"

using namespace invtopos;

TEST_CASE("representable presheaves") {
  auto lz3 = build_logan(fixtures::z3());
  auto y1 = representable(lz3, *fixtures::z3()->index("1"));
  CHECK(y1.set_size(0) == 3);

  auto lsl3 = build_logan(fixtures::sl3());
  auto const& sl3 = *fixtures::sl3();
  auto ye = representable(lsl3, *sl3.index("e"));
  CHECK(ye.set_size(lsl3->object_of(*sl3.index("g"))) == 1);
  CHECK(ye.set_size(lsl3->object_of(*sl3.index("e"))) == 1);
  CHECK(ye.set_size(lsl3->object_of(*sl3.index("f"))) == 0);

  auto lch2 = build_logan(fixtures::ch2());
  auto const& ch2 = *fixtures::ch2();
  auto ye2 = representable(lch2, *ch2.index("e"));
  CHECK(ye2.total_size() == 2);
}

TEST_CASE("tensor with a representable is evaluation (co-Yoneda)") {
  for (auto const& name : fixtures::action_names()) {
    auto a = phi(fixtures::action_by_name(name));
    for (int e : a.logan().sgp().idempotents()) {
      INFO(name, " at ", a.logan().sgp().name(e));
      CHECK(co_yoneda_check(a, e).value);
    }
  }
  auto terminal_f = constant_singleton(build_logan(fixtures::sl3()));
  for (int e : terminal_f.logan().sgp().idempotents()) {
    CHECK(co_yoneda_check(terminal_f, e).value);
  }
}

TEST_CASE("tensor with the terminal presheaf counts connected components") {
  // Phi(2.Z3) has two components; Phi(regular Z3) has one.
  auto two = phi(fixtures::z3_double());
  CHECK(tensor(terminal_presheaf(two.logan_ptr()), two).size() == 2);

  auto one = phi(fixtures::z3_regular());
  CHECK(tensor(terminal_presheaf(one.logan_ptr()), one).size() == 1);

  // Independent oracle: count components of the category of elements by
  // sweeping over arrows.
  for (auto const& name : fixtures::action_names()) {
    auto f = phi(fixtures::action_by_name(name));
    auto el = category_of_elements(f);
    UnionFind uf(el.cat.object_count());
    for (int ar = 0; ar < el.cat.arrow_count(); ++ar) {
      uf.unite(el.cat.arrow(ar).src, el.cat.arrow(ar).tgt);
    }
    std::set<int> roots;
    for (int obj = 0; obj < el.cat.object_count(); ++obj) {
      roots.insert(uf.find(obj));
    }
    INFO(name);
    CHECK(tensor(terminal_presheaf(f.logan_ptr()), f).size() ==
          static_cast<int>(roots.size()));
  }
}

TEST_CASE("tensor with the empty functor is empty") {
  auto logan = build_logan(fixtures::sl3());
  std::vector<std::vector<std::string>> none(3);
  std::vector<std::vector<int>> maps(logan->arrow_count());
  auto empty = SetFunctor::validate(logan, none, maps);
  CHECK(tensor(terminal_presheaf(logan), empty).size() == 0);
  CHECK(tensor(representable(logan, *fixtures::sl3()->index("e")), empty).size() == 0);
}

TEST_CASE("hom presheaf sizes") {
  auto a = constant_singleton(build_logan(fixtures::sl3()));
  auto h = hom_presheaf(a, 2);
  for (int obj = 0; obj < 3; ++obj) {
    CHECK(h.set_size(obj) == 2);
  }

  auto reg = phi(fixtures::z3_regular());
  CHECK(hom_presheaf(reg, 2).set_size(0) == 8);

  auto b2f = phi(fixtures::b2_natural_action());
  auto hb = hom_presheaf(b2f, 1);
  for (int obj = 0; obj < hb.logan().cat().object_count(); ++obj) {
    CHECK(hb.set_size(obj) == 1);
  }
}

TEST_CASE("adjunction between tensor and hom") {
  for (auto const& sname : {"Z3", "SL3", "CH2", "B2"}) {
    auto sgp = fixtures::semigroup_by_name(sname);
    auto logan = build_logan(sgp);
    std::vector<SetFunctor> functors;
    functors.push_back(constant_singleton(logan));
    if (sname == std::string("Z3")) {
      functors.push_back(phi(fixtures::z3_regular(), logan));
    }
    if (sname == std::string("B2")) {
      functors.push_back(phi(fixtures::b2_natural_action(), logan));
    }
    for (auto const& [pname, p] : default_presheaf_suite(logan)) {
      for (auto const& a : functors) {
        for (int r = 1; r <= 3; ++r) {
          auto report = check_adjunction(p, a, r);
          INFO(sname, " ", pname, " r=", r, " ", report.detail);
          CHECK(report.ok);
        }
      }
    }
  }

  // With an empty presheaf both sides are singletons.
  auto logan = build_logan(fixtures::sl3());
  std::vector<std::vector<std::string>> none(3);
  std::vector<std::vector<int>> maps(logan->arrow_count());
  auto empty_p = Presheaf::validate(logan, none, maps);
  auto report = check_adjunction(empty_p, constant_singleton(logan), 2);
  CHECK(report.ok);
  CHECK(report.functions_checked == 1);
}

TEST_CASE("flatness spot-check passes for filtered functors") {
  for (auto const& name : {"z3-regular", "b2-natural-action", "i2-natural-action",
                           "sl3-point-action"}) {
    auto f = phi(fixtures::action_by_name(name));
    auto report = flatness_spotcheck(f);
    INFO(name);
    CHECK(report.filtered);
    for (auto const& item : report.items) {
      INFO(item.name, " ", item.detail);
      CHECK(item.holds);
    }
  }
}

TEST_CASE("flatness spot-check finds a failure for a non-filtered functor") {
  auto f = phi(fixtures::z3_double());
  auto report = flatness_spotcheck(f);
  CHECK_FALSE(report.filtered);
  CHECK_FALSE(report.all_preserved());
  // The terminal comparison already fails: two components.
  CHECK_FALSE(report.items.front().holds);
  // And some binary product comparison must fail as well.
  bool product_failure = false;
  for (auto const& item : report.items) {
    product_failure = product_failure ||
                      (!item.holds && item.name.rfind("product", 0) == 0);
  }
  CHECK(product_failure);
}

TEST_CASE("tensor cardinality is invariant under functor relabeling") {
  auto a = phi(fixtures::b2_natural_action());
  auto logan = a.logan_ptr();
  // Relabel: permute the elements of each object set.
  auto obj = a.object_sets();
  auto maps = a.arrow_maps();
  // Reverse each object set and adjust the maps.
  std::vector<std::vector<int>> perm(obj.size());
  for (size_t o = 0; o < obj.size(); ++o) {
    int const n = static_cast<int>(obj[o].size());
    perm[o].resize(n);
    for (int i = 0; i < n; ++i) {
      perm[o][i] = n - 1 - i;
    }
    std::reverse(obj[o].begin(), obj[o].end());
  }
  for (int ar = 0; ar < logan->cat().arrow_count(); ++ar) {
    auto const& arrow = logan->cat().arrow(ar);
    std::vector<int> remapped(maps[ar].size());
    for (size_t i = 0; i < maps[ar].size(); ++i) {
      remapped[perm[arrow.src][i]] = perm[arrow.tgt][maps[ar][i]];
    }
    maps[ar] = std::move(remapped);
  }
  auto relabeled = SetFunctor::validate(logan, obj, maps);
  for (auto const& [pname, p] : default_presheaf_suite(logan)) {
    CHECK(tensor(p, a).size() == tensor(p, relabeled).size());
  }
}
