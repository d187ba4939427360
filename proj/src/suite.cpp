#include "invtopos/suite.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "invtopos/cosets_filters.hpp"
#include "invtopos/finite_bundles.hpp"
#include "invtopos/fixtures.hpp"
#include "invtopos/phi_psi.hpp"
#include "invtopos/presheaf_tensor.hpp"
#include "invtopos/random_gen.hpp"

namespace invtopos::suite {

namespace {

// One criterion under construction: count checks, collect failures.
struct Tally {
  CriterionResult result;

  explicit Tally(int id, std::string name) {
    result.id = id;
    result.name = std::move(name);
  }

  void expect(bool ok, std::string const& what) {
    ++result.checks;
    if (!ok) {
      result.failures.push_back(what);
    }
  }

  CriterionResult finish() {
    result.pass = result.failures.empty() && result.checks > 0;
    return result;
  }
};

std::vector<std::string> const kCanonicalFive = {"Z3", "SL3", "CH2", "B2", "I2"};

std::vector<std::pair<std::string, PartialAction>> fixture_actions() {
  std::vector<std::pair<std::string, PartialAction>> out;
  for (auto const& name : fixtures::action_names()) {
    out.emplace_back(name, fixtures::action_by_name(name));
  }
  for (auto const& sname : kCanonicalFive) {
    auto sgp = fixtures::semigroup_by_name(sname);
    for (auto const& h : enumerate_closed_subsemigroups(*sgp)) {
      out.emplace_back("coset(" + sname + "," + element_set_label(*sgp, h) + ")",
                       coset_action(sgp, h));
    }
  }
  return out;
}

// Over a discrete base a bundle is just one functor per point.
Bundle discrete_bundle(std::vector<SetFunctor> const& stalk_functors) {
  auto space = discrete_space(static_cast<int>(stalk_functors.size()));
  LoganPtr logan = stalk_functors.front().logan_ptr();
  FiniteCategory const& cat = logan->cat();
  int const n = space->size();

  std::vector<FiniteSheaf> sheaves;
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    std::vector<std::vector<std::string>> stalks(n);
    std::vector<std::vector<std::vector<int>>> res(n, std::vector<std::vector<int>>(n));
    for (int x = 0; x < n; ++x) {
      stalks[x] = stalk_functors[x].object_sets()[obj];
      res[x][x].resize(stalks[x].size());
      std::iota(res[x][x].begin(), res[x][x].end(), 0);
    }
    sheaves.push_back(FiniteSheaf::validate(space, std::move(stalks), std::move(res)));
  }
  std::vector<std::vector<std::vector<int>>> arrow_maps(cat.arrow_count());
  for (int a = 0; a < cat.arrow_count(); ++a) {
    for (int x = 0; x < n; ++x) {
      arrow_maps[a].push_back(stalk_functors[x].arrow_maps()[a]);
    }
  }
  return Bundle::validate(logan, std::move(space), std::move(sheaves),
                          std::move(arrow_maps));
}

Bundle twisted_z3_bundle() {
  auto f = phi(fixtures::z3_regular());
  auto space = sierpinski_space();
  auto const& z3 = *fixtures::z3();
  int const a = *z3.index("a");

  std::vector<std::vector<std::string>> stalks(2, f.object_sets()[0]);
  std::vector<std::vector<std::vector<int>>> res(2, std::vector<std::vector<int>>(2));
  res[0][0] = {0, 1, 2};
  res[1][1] = {0, 1, 2};
  res[0][1].resize(3);
  for (int x = 0; x < 3; ++x) {
    res[0][1][x] = z3.mul(x, a);
  }
  FiniteSheaf sheaf = FiniteSheaf::validate(space, std::move(stalks), std::move(res));
  std::vector<std::vector<std::vector<int>>> arrow_maps(f.logan().cat().arrow_count());
  for (int ar = 0; ar < f.logan().cat().arrow_count(); ++ar) {
    arrow_maps[ar] = {f.arrow_maps()[ar], f.arrow_maps()[ar]};
  }
  return Bundle::validate(f.logan_ptr(), space, {sheaf}, std::move(arrow_maps));
}

void criterion_1(Report& report) {
  Tally t(1, "non-connected SL3 action and its 3-point coreflector");
  auto a = fixtures::ex33_action();
  t.expect(a.carrier_size() == 2, "action validates on a 2-point carrier");

  auto strict = is_strict(a);
  t.expect(!strict.value, "action is not strict");

  auto connected = is_connected(a);
  t.expect(!connected.value, "action is not connected");
  t.expect(connected.witness && connected.witness->parts == std::vector<std::string>{"2"},
           "non-connectedness witnessed at point 2");

  auto beta = counit_beta(a);
  t.expect(beta.source.carrier_size() == 3, "coreflector carrier has size 3");
  std::set<int> image(beta.map.begin(), beta.map.end());
  t.expect(image.size() == 2 && beta.target.carrier_size() == 2,
           "beta is a 3-to-2 surjection");
  t.expect(beta.map.size() == 3 && image.size() < beta.map.size(),
           "beta is not injective");
  report.criteria.push_back(t.finish());
}

void criterion_2(Report& report, Options const& options) {
  Tally t(2, "round trips on fixtures and random instances");
  std::vector<std::pair<std::string, PartialAction>> actions = fixture_actions();
  if (!options.fixtures_only) {
    std::mt19937_64 rng(options.seed);
    RandomConfig cfg;
    for (int i = 0; i < options.random_instances; ++i) {
      actions.emplace_back("random#" + std::to_string(i), random_action(rng, cfg));
    }
  }
  std::vector<std::pair<std::string, SetFunctor>> functors;
  for (auto const& [name, a] : actions) {
    functors.emplace_back("phi(" + name + ")", phi(a));
  }
  for (auto const& sname : kCanonicalFive) {
    functors.emplace_back("terminal(" + sname + ")",
                          constant_singleton(build_logan(fixtures::semigroup_by_name(sname))));
  }

  auto rt = verify_round_trips(actions, functors);
  for (auto const& check : rt.checks) {
    t.expect(check.pass, check.name + (check.detail.empty() ? "" : ": " + check.detail));
  }
  if (!options.fixtures_only) {
    t.expect(options.random_instances >= 100, "at least 100 random instances");
  }
  report.criteria.push_back(t.finish());
}

void criterion_3(Report& report) {
  Tally t(3, "coreflection hom-set bijection");
  auto all = fixture_actions();
  for (auto const& [aname, a] : all) {
    if (a.carrier_size() > 4 || !is_connected(a).value) {
      continue;
    }
    for (auto const& [bname, b] : all) {
      if (b.carrier_size() > 4 || a.sgp_ptr().get() != b.sgp_ptr().get()) {
        continue;
      }
      auto beta = counit_beta(b);
      auto direct = enumerate_morphisms(a, b);
      auto lifted = enumerate_morphisms(a, beta.source);
      std::set<std::vector<int>> composed;
      bool all_land = true;
      for (auto const& f : lifted) {
        std::vector<int> c(f.size());
        for (size_t x = 0; x < f.size(); ++x) {
          c[x] = beta.map[f[x]];
        }
        all_land = all_land && check_morphism(a, b, c).value;
        composed.insert(std::move(c));
      }
      std::string const pair = aname + " -> " + bname;
      t.expect(all_land, pair + ": composites are morphisms");
      t.expect(composed.size() == lifted.size(), pair + ": composition with beta injective");
      t.expect(composed.size() == direct.size(), pair + ": composition with beta surjective");
    }
  }
  report.criteria.push_back(t.finish());
}

void criterion_4(Report& report) {
  Tally t(4, "coset actions are strict transitive with directed pullback-preserving functors");
  for (auto const& sname : fixtures::semigroup_names()) {
    auto sgp = fixtures::semigroup_by_name(sname);
    for (auto const& h : enumerate_closed_subsemigroups(*sgp)) {
      std::string const label = sname + " H=" + element_set_label(*sgp, h);
      auto a = coset_action(sgp, h);
      t.expect(is_strict(a).value, label + ": strict");
      t.expect(is_transitive(a).value, label + ": transitive");
      auto f = phi(a);
      t.expect(is_directed(f).value, label + ": phi directed");
      t.expect(preserves_pullbacks(f), label + ": phi preserves pullbacks");
    }
  }
  for (auto const& [name, a] : fixture_actions()) {
    if (!is_strict(a).value || !is_transitive(a).value) {
      continue;
    }
    try {
      auto dec = schein_decompose(a);
      t.expect(dec.cosets.carrier_size() == a.carrier_size(),
               name + ": recovered coset action has the same carrier size");
    } catch (std::exception const& err) {
      t.expect(false, name + ": schein_decompose failed: " + err.what());
    }
  }
  report.criteria.push_back(t.finish());
}

void criterion_5(Report& report) {
  Tally t(5, "torsor iff H = E(H)^up over all closed subsemigroups");
  bool saw_b2_e1 = false, saw_b2_e2 = false, saw_z3_trivial = false, saw_z3_whole = false;
  for (auto const& sname : kCanonicalFive) {
    auto sgp = fixtures::semigroup_by_name(sname);
    for (auto const& h : enumerate_closed_subsemigroups(*sgp)) {
      auto a = coset_action(sgp, h);
      ElementSet idem_part;
      for (int x : h) {
        if (sgp->is_idempotent(x)) {
          idem_part.push_back(x);
        }
      }
      bool const closure_condition = sgp->up_closure(idem_part) == h;
      bool const torsor = is_torsor(a);
      std::string const label = sname + " H=" + element_set_label(*sgp, h);
      t.expect(torsor == closure_condition, label + ": torsor iff H = E(H)^up");

      if (sname == "B2" && h == ElementSet{*sgp->index("e1")}) {
        saw_b2_e1 = true;
        t.expect(torsor, label + ": expected positive");
      }
      if (sname == "B2" && h == ElementSet{*sgp->index("e2")}) {
        saw_b2_e2 = true;
        t.expect(torsor, label + ": expected positive");
      }
      if (sname == "Z3" && static_cast<int>(h.size()) == sgp->size()) {
        saw_z3_whole = true;
        t.expect(!torsor, label + ": expected negative");
      }
      if (sname == "Z3" && h == ElementSet{*sgp->index("1")}) {
        saw_z3_trivial = true;
        t.expect(torsor, label + ": expected positive");
      }
    }
  }
  t.expect(saw_b2_e1 && saw_b2_e2 && saw_z3_trivial && saw_z3_whole,
           "all named subsemigroups enumerated");
  report.criteria.push_back(t.finish());
}

void criterion_6(Report& report) {
  Tally t(6, "universal iff filtered");
  for (auto const& [name, a] : fixture_actions()) {
    if (!is_strict(a).value || !is_transitive(a).value) {
      continue;
    }
    t.expect(is_universal(a) == is_filtered(phi(a)).value, name + ": universal iff filtered");
  }
  report.criteria.push_back(t.finish());
}

void criterion_7(Report& report, Options const& options) {
  Tally t(7, "filtered implies directed and pullback-preserving");
  std::vector<std::pair<std::string, SetFunctor>> functors;
  for (auto const& [name, a] : fixture_actions()) {
    functors.emplace_back("phi(" + name + ")", phi(a));
  }
  for (auto const& sname : kCanonicalFive) {
    functors.emplace_back("terminal(" + sname + ")",
                          constant_singleton(build_logan(fixtures::semigroup_by_name(sname))));
  }
  if (!options.fixtures_only) {
    std::mt19937_64 rng(options.seed + 1);
    RandomConfig cfg;
    for (int i = 0; i < options.random_instances / 2; ++i) {
      functors.emplace_back("phi(random#" + std::to_string(i) + ")",
                            phi(random_action(rng, cfg)));
    }
  }
  for (auto const& [name, f] : functors) {
    if (!is_filtered(f).value) {
      continue;
    }
    ++t.result.checks;
    if (!is_directed(f).value) {
      t.result.failures.push_back(name + ": filtered but not directed");
    }
    if (!is_torsion_free(f).value) {
      t.result.failures.push_back(name + ": filtered but not torsion-free");
    } else if (!preserves_pullbacks(f)) {
      t.result.failures.push_back(name + ": filtered but does not preserve pullbacks");
    }
  }
  report.criteria.push_back(t.finish());
}

void criterion_8(Report& report) {
  Tally t(8, "co-Yoneda and the tensor/hom adjunction");
  int adjunctions_run = 0;
  for (auto const& sname : kCanonicalFive) {
    auto sgp = fixtures::semigroup_by_name(sname);
    auto logan = build_logan(sgp);

    std::vector<std::pair<std::string, SetFunctor>> functors;
    functors.emplace_back("terminal", constant_singleton(logan));
    for (auto const& aname : fixtures::action_names()) {
      auto a = fixtures::action_by_name(aname);
      if (a.sgp_ptr().get() == sgp.get()) {
        functors.emplace_back("phi(" + aname + ")", phi(a, logan));
      }
    }

    for (auto const& [fname, f] : functors) {
      for (int e : sgp->idempotents()) {
        t.expect(co_yoneda_check(f, e).value,
                 sname + " " + fname + ": co-Yoneda at " + sgp->name(e));
      }
      for (auto const& [pname, p] : default_presheaf_suite(logan)) {
        for (int r = 1; r <= 3; ++r) {
          auto res = check_adjunction(p, f, r);
          if (!res.ok && res.detail == "function side exceeds enumeration cap") {
            continue;  // infeasible at desk scale, not a failure
          }
          ++adjunctions_run;
          t.expect(res.ok, sname + " " + fname + " " + pname + " r=" +
                               std::to_string(r) + ": adjunction (" + res.detail + ")");
        }
      }
    }
  }
  t.expect(adjunctions_run >= 100, "enough adjunction instances were enumerable");
  report.criteria.push_back(t.finish());
}

void criterion_9(Report& report) {
  Tally t(9, "flatness spot-check");
  for (auto const& aname : {"z3-regular", "b2-natural-action", "i2-natural-action",
                            "sl3-point-action"}) {
    auto f = phi(fixtures::action_by_name(aname));
    auto res = flatness_spotcheck(f);
    t.expect(res.filtered, std::string(aname) + ": filtered");
    for (auto const& item : res.items) {
      t.expect(item.holds, std::string(aname) + ": " + item.name + " (" + item.detail + ")");
    }
  }
  {
    auto f = phi(fixtures::z3_double());
    auto res = flatness_spotcheck(f);
    t.expect(!res.filtered, "phi(2.Z3) is not filtered");
    bool product_failure = false;
    for (auto const& item : res.items) {
      product_failure = product_failure ||
                        (!item.holds && item.name.rfind("product", 0) == 0);
    }
    t.expect(product_failure, "phi(2.Z3): a product comparison fails");
  }
  report.criteria.push_back(t.finish());
}

void criterion_10(Report& report) {
  Tally t(10, "bundle equivalence at desk scale");

  // (a) One-point base must agree exactly with the psi machinery.
  for (auto const& aname : {"z3-regular", "b2-natural-action"}) {
    auto f = phi(fixtures::action_by_name(aname));
    auto sa = tau(constant_bundle(f, one_point_space()));
    auto direct = psi_with_classes(f);
    bool agree = sa.sheaf.stalk_size(0) == direct.action.carrier_size();
    for (int i = 0; agree && i < direct.action.carrier_size(); ++i) {
      agree = sa.sheaf.elem_label(0, i) == direct.action.point_name(i);
    }
    for (int s = 0; agree && s < direct.action.sgp().size(); ++s) {
      for (int x = 0; agree && x < direct.action.carrier_size(); ++x) {
        agree = sa.action.apply(s, x) == direct.action.apply(s, x);
      }
    }
    t.expect(agree, std::string(aname) + ": tau over a point equals psi");
  }

  std::vector<std::pair<std::string, Bundle>> bundles;
  std::vector<std::pair<std::string, SheafAction>> actions;
  auto fz3 = phi(fixtures::z3_regular());
  auto fb2 = phi(fixtures::b2_natural_action());
  bundles.emplace_back("point/Z3", constant_bundle(fz3, one_point_space()));
  bundles.emplace_back("point/B2", constant_bundle(fb2, one_point_space()));
  bundles.emplace_back("sierpinski/Z3", constant_bundle(fz3, sierpinski_space()));
  bundles.emplace_back("sierpinski/B2", constant_bundle(fb2, sierpinski_space()));
  bundles.emplace_back("sierpinski/Z3-twisted", twisted_z3_bundle());
  bundles.emplace_back("discrete2/Z3", constant_bundle(fz3, discrete_space(2)));
  bundles.emplace_back("discrete2/B2", constant_bundle(fb2, discrete_space(2)));
  {
    // Two independent torsors of B2 side by side: the natural action and
    // the one-coset action of the whole semigroup.
    auto b2 = fixtures::b2();
    ElementSet whole(b2->size());
    std::iota(whole.begin(), whole.end(), 0);
    auto fb2_whole = phi(coset_action(b2, whole), fb2.logan_ptr());
    bundles.emplace_back("discrete2/B2-mixed", discrete_bundle({fb2, fb2_whole}));
  }
  actions.emplace_back("point/Z3", sheaf_action_over_point(fixtures::z3_regular()));
  actions.emplace_back("point/B2", sheaf_action_over_point(fixtures::b2_natural_action()));
  actions.emplace_back("sierpinski/Z3-twisted-tau", tau(twisted_z3_bundle()));

  auto res = verify_bundle_equiv(bundles, actions);
  for (auto const& check : res.checks) {
    t.expect(check.pass, check.name + (check.detail.empty() ? "" : ": " + check.detail));
  }
  report.criteria.push_back(t.finish());
}

void criterion_11(Report& report) {
  Tally t(11, "meet action on a chain is rejected");
  try {
    PartialAction::validate(fixtures::ch3(), {"c0", "c1", "c2"},
                            fixtures::ch3_meet_tables());
    t.expect(false, "meet action must not validate");
  } catch (ValidationError const& err) {
    t.expect(err.code() == "NotInjective",
             std::string("rejected with NotInjective, got ") + err.code());
  }
  report.criteria.push_back(t.finish());
}

void criterion_12(Report& report) {
  Tally t(12, "filter enumeration");
  t.expect(enumerate_filters_in_e(*fixtures::sl3()).size() == 3,
           "E(SL3) has exactly 3 filters");
  t.expect(enumerate_filters_in_e(*fixtures::b2()).size() == 3,
           "E(B2) has exactly 3 filters");
  for (auto const& sname : fixtures::semigroup_names()) {
    auto sgp = fixtures::semigroup_by_name(sname);
    auto data = filter_groupoid_data(*sgp);
    auto e_filters = enumerate_filters_in_e(*sgp);
    for (size_t i = 0; i < data.filters_in_s.size(); ++i) {
      t.expect(std::find(e_filters.begin(), e_filters.end(), data.d_of[i]) !=
                   e_filters.end(),
               sname + " F=" + element_set_label(*sgp, data.filters_in_s[i]) +
                   ": d(F) is a filter in E(S)");
    }
  }
  report.criteria.push_back(t.finish());
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](CriterionResult const& c) { return c.pass; });
}

Report run(Options const& options) {
  Report report;
  criterion_1(report);
  criterion_2(report, options);
  criterion_3(report);
  criterion_4(report);
  criterion_5(report);
  criterion_6(report);
  criterion_7(report, options);
  criterion_8(report);
  criterion_9(report);
  criterion_10(report);
  criterion_11(report);
  criterion_12(report);
  return report;
}

}  // namespace invtopos::suite
