#include "invtopos/finite_bundles.hpp"

#include <algorithm>

#include "invtopos/cosets_filters.hpp"

namespace invtopos {

FiniteSpace FiniteSpace::validate(std::vector<std::string> points,
                                  std::vector<std::pair<int, int>> leq_pairs) {
  int const n = static_cast<int>(points.size());
  if (n == 0) {
    fail({"MalformedSpace", {}, "empty point list"});
  }
  if (n > kMaxBasePoints) {
    fail({"TooLarge", {std::to_string(n)},
          "base spaces are capped at " + std::to_string(kMaxBasePoints) + " points"});
  }
  {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail({"MalformedSpace", {}, "duplicate point name"});
    }
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    leq[x][x] = true;
  }
  for (auto const& [x, y] : leq_pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      fail({"MalformedSpace", {}, "order pair out of range"});
    }
    leq[x][y] = true;
  }
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        leq[x][y] = leq[x][y] || (leq[x][k] && leq[k][y]);
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (leq[x][y] && leq[y][x]) {
        fail({"NotAntisymmetric", {points[x], points[y]}, ""});
      }
    }
  }
  FiniteSpace out;
  out.points_ = std::move(points);
  out.leq_ = std::move(leq);
  return out;
}

std::optional<int> FiniteSpace::point_index(std::string_view name) const {
  for (int x = 0; x < size(); ++x) {
    if (points_[x] == name) {
      return x;
    }
  }
  return std::nullopt;
}

SpacePtr one_point_space() {
  return std::make_shared<const FiniteSpace>(FiniteSpace::validate({"pt"}, {}));
}

SpacePtr sierpinski_space() {
  return std::make_shared<const FiniteSpace>(
      FiniteSpace::validate({"c", "o"}, {{0, 1}}));
}

SpacePtr discrete_space(int n) {
  std::vector<std::string> points;
  for (int i = 0; i < n; ++i) {
    points.push_back("x" + std::to_string(i));
  }
  return std::make_shared<const FiniteSpace>(FiniteSpace::validate(points, {}));
}

FiniteSheaf FiniteSheaf::validate(SpacePtr space,
                                  std::vector<std::vector<std::string>> stalks,
                                  std::vector<std::vector<std::vector<int>>> res) {
  FiniteSpace const& sp = *space;
  int const n = sp.size();
  if (static_cast<int>(stalks.size()) != n || static_cast<int>(res.size()) != n) {
    fail({"MalformedSheaf", {}, "stalk or restriction table size mismatch"});
  }
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(res[x].size()) != n) {
      fail({"MalformedSheaf", {sp.point_name(x)}, "restriction row size mismatch"});
    }
    for (int y = 0; y < n; ++y) {
      if (!sp.leq(x, y)) {
        if (!res[x][y].empty()) {
          fail({"MalformedSheaf", {sp.point_name(x), sp.point_name(y)},
                "restriction along a non-comparable pair"});
        }
        continue;
      }
      if (res[x][y].size() != stalks[x].size()) {
        fail({"MalformedSheaf", {sp.point_name(x), sp.point_name(y)},
              "restriction length does not match stalk"});
      }
      for (int v : res[x][y]) {
        if (v < 0 || v >= static_cast<int>(stalks[y].size())) {
          fail({"MalformedSheaf", {sp.point_name(x), sp.point_name(y)},
                "restriction image out of range"});
        }
      }
    }
    for (int i = 0; i < static_cast<int>(stalks[x].size()); ++i) {
      if (res[x][x][i] != i) {
        fail({"IdentityViolation", {sp.point_name(x)}, "restriction at x is not the identity"});
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!sp.leq(x, y)) {
        continue;
      }
      for (int z = 0; z < n; ++z) {
        if (!sp.leq(y, z)) {
          continue;
        }
        for (int i = 0; i < static_cast<int>(stalks[x].size()); ++i) {
          if (res[x][z][i] != res[y][z][res[x][y][i]]) {
            fail({"CompositionViolation",
                  {sp.point_name(x), sp.point_name(y), sp.point_name(z)},
                  "restrictions do not compose"});
          }
        }
      }
    }
  }
  FiniteSheaf out;
  out.space_ = std::move(space);
  out.stalks_ = std::move(stalks);
  out.res_ = std::move(res);
  return out;
}

std::optional<int> FiniteSheaf::elem_index(int x, std::string_view label) const {
  for (int i = 0; i < stalk_size(x); ++i) {
    if (stalks_[x][i] == label) {
      return i;
    }
  }
  return std::nullopt;
}

Bundle Bundle::validate(LoganPtr logan, SpacePtr space,
                        std::vector<FiniteSheaf> sheaves,
                        std::vector<std::vector<std::vector<int>>> arrow_maps) {
  FiniteCategory const& cat = logan->cat();
  FiniteSpace const& sp = *space;
  if (static_cast<int>(sheaves.size()) != cat.object_count() ||
      static_cast<int>(arrow_maps.size()) != cat.arrow_count()) {
    fail({"MalformedBundle", {}, "one sheaf per object and one map per arrow required"});
  }
  for (int a = 0; a < cat.arrow_count(); ++a) {
    auto const& arr = cat.arrow(a);
    if (static_cast<int>(arrow_maps[a].size()) != sp.size()) {
      fail({"MalformedBundle", {arr.label}, "one stalk map per point required"});
    }
    for (int x = 0; x < sp.size(); ++x) {
      if (static_cast<int>(arrow_maps[a][x].size()) != sheaves[arr.src].stalk_size(x)) {
        fail({"MalformedBundle", {arr.label, sp.point_name(x)},
              "stalk map length mismatch"});
      }
      for (int v : arrow_maps[a][x]) {
        if (v < 0 || v >= sheaves[arr.tgt].stalk_size(x)) {
          fail({"MalformedBundle", {arr.label, sp.point_name(x)}, "image out of range"});
        }
      }
    }
  }

  Bundle out;
  out.logan_ = std::move(logan);
  out.space_ = std::move(space);
  out.sheaves_ = std::move(sheaves);
  out.arrow_maps_ = std::move(arrow_maps);

  // Per-point functoriality: every stalk assignment is a functor.
  for (int x = 0; x < sp.size(); ++x) {
    try {
      out.stalk_functor(x);
    } catch (ValidationError const& err) {
      Witness w = err.witness();
      w.parts.insert(w.parts.begin(), sp.point_name(x));
      fail(std::move(w));
    }
  }

  // Naturality of every arrow map with respect to generization.
  for (int a = 0; a < out.logan_->cat().arrow_count(); ++a) {
    auto const& arr = out.logan_->cat().arrow(a);
    for (int x = 0; x < sp.size(); ++x) {
      for (int y = 0; y < sp.size(); ++y) {
        if (!sp.leq(x, y)) {
          continue;
        }
        for (int i = 0; i < out.sheaves_[arr.src].stalk_size(x); ++i) {
          int const lhs = out.arrow_maps_[a][y][out.sheaves_[arr.src].res(x, y, i)];
          int const rhs = out.sheaves_[arr.tgt].res(x, y, out.arrow_maps_[a][x][i]);
          if (lhs != rhs) {
            fail({"NaturalityViolation",
                  {arr.label, sp.point_name(x), sp.point_name(y)},
                  "arrow map does not commute with generization"});
          }
        }
      }
    }
  }
  return out;
}

SetFunctor Bundle::stalk_functor(int x) const {
  FiniteCategory const& cat = logan_->cat();
  std::vector<std::vector<std::string>> obj_elems(cat.object_count());
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    for (int i = 0; i < sheaves_[obj].stalk_size(x); ++i) {
      obj_elems[obj].push_back(sheaves_[obj].elem_label(x, i));
    }
  }
  std::vector<std::vector<int>> maps(cat.arrow_count());
  for (int a = 0; a < cat.arrow_count(); ++a) {
    maps[a] = arrow_maps_[a][x];
  }
  return SetFunctor::validate(logan_, std::move(obj_elems), std::move(maps));
}

SheafAction SheafAction::make(SemigroupPtr sgp, FiniteSheaf sheaf,
                              std::vector<std::vector<int>> act) {
  FiniteSpace const& sp = sheaf.space();
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> flat(sp.size());
  std::vector<std::pair<int, int>> unflat;
  for (int x = 0; x < sp.size(); ++x) {
    flat[x].resize(sheaf.stalk_size(x));
    for (int i = 0; i < sheaf.stalk_size(x); ++i) {
      flat[x][i] = static_cast<int>(carrier.size());
      unflat.emplace_back(x, i);
      carrier.push_back(sp.point_name(x) + ":" + sheaf.elem_label(x, i));
    }
  }
  PartialAction action = PartialAction::validate(sgp, std::move(carrier),
                                                 std::move(act),
                                                 /*allow_non_effective=*/true);
  SpacePtr space = sheaf.space_ptr();
  return SheafAction{std::move(sgp),   std::move(space), std::move(sheaf),
                     std::move(action), std::move(flat),  std::move(unflat)};
}

Verdict is_principal(Bundle const& b) {
  for (int x = 0; x < b.space().size(); ++x) {
    auto verdict = is_filtered(b.stalk_functor(x));
    if (!verdict) {
      Witness w = *verdict.witness;
      w.parts.insert(w.parts.begin(), b.space().point_name(x));
      w.detail = "stalk functor fails " + w.code + (w.detail.empty() ? "" : ": " + w.detail);
      w.code = "NotPrincipal";
      return Verdict::no(std::move(w));
    }
  }
  return Verdict::yes();
}

namespace {

// The restriction of the total action to one stalk, as a PartialAction.
PartialAction stalk_action(SheafAction const& sa, int x) {
  InverseSemigroup const& s = *sa.sgp;
  int const k = sa.sheaf.stalk_size(x);
  std::vector<std::string> carrier;
  for (int i = 0; i < k; ++i) {
    carrier.push_back(sa.sheaf.elem_label(x, i));
  }
  std::vector<std::vector<int>> act(s.size(), std::vector<int>(k, -1));
  for (int elt = 0; elt < s.size(); ++elt) {
    for (int i = 0; i < k; ++i) {
      int const image = sa.action.apply(elt, sa.flat[x][i]);
      if (image >= 0) {
        auto const [y, j] = sa.unflat[image];
        if (y != x) {
          fail({"StalkEscape", {s.name(elt), sa.space->point_name(x)}, ""});
        }
        act[elt][i] = j;
      }
    }
  }
  return PartialAction::validate(sa.sgp, std::move(carrier), std::move(act));
}

}  // namespace

bool UniversalSheafReport::ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](Item const& i) { return i.holds; });
}

UniversalSheafReport check_universal_sheaf_action(SheafAction const& sa) {
  UniversalSheafReport report;
  InverseSemigroup const& s = *sa.sgp;
  FiniteSpace const& sp = *sa.space;

  {  // U1: every stalk has a point in some domain (stalks nonempty).
    bool holds = true;
    std::string detail;
    for (int x = 0; x < sp.size() && holds; ++x) {
      if (sa.sheaf.stalk_size(x) == 0) {
        holds = false;
        detail = "empty stalk at " + sp.point_name(x);
        break;
      }
      bool covered = false;
      for (int i = 0; i < sa.sheaf.stalk_size(x) && !covered; ++i) {
        for (int elt = 0; elt < s.size() && !covered; ++elt) {
          covered = sa.action.defined(elt, sa.flat[x][i]);
        }
      }
      if (!covered) {
        holds = false;
        detail = "no action defined anywhere on the stalk at " + sp.point_name(x);
      }
    }
    report.items.push_back({"U1", holds, detail});
  }

  {  // U2: domains are open (stable under generization).
    bool holds = true;
    std::string detail;
    for (int elt = 0; elt < s.size() && holds; ++elt) {
      for (int t = 0; t < sa.action.carrier_size() && holds; ++t) {
        if (!sa.action.defined(elt, t)) {
          continue;
        }
        auto const [x, i] = sa.unflat[t];
        for (int y = 0; y < sp.size() && holds; ++y) {
          if (!sp.leq(x, y)) {
            continue;
          }
          if (!sa.action.defined(elt, sa.flat[y][sa.sheaf.res(x, y, i)])) {
            holds = false;
            detail = "domain of " + s.name(elt) + " not open at " +
                     sa.action.point_name(t) + " towards " + sp.point_name(y);
          }
        }
      }
    }
    report.items.push_back({"U2", holds, detail});
  }

  bool stalks_invariant = true;
  {  // U3: the action preserves stalks.
    std::string detail;
    for (int elt = 0; elt < s.size() && stalks_invariant; ++elt) {
      for (int t = 0; t < sa.action.carrier_size(); ++t) {
        int const image = sa.action.apply(elt, t);
        if (image >= 0 && sa.unflat[image].first != sa.unflat[t].first) {
          stalks_invariant = false;
          detail = s.name(elt) + " moves " + sa.action.point_name(t) + " to " +
                   sa.action.point_name(image);
          break;
        }
      }
    }
    report.items.push_back({"U3", stalks_invariant, detail});
  }

  {  // U4: each stalk action is universal (strict, transitive, H = E(H)^up).
    bool holds = stalks_invariant;
    std::string detail = stalks_invariant ? "" : "skipped: U3 fails";
    for (int x = 0; x < sp.size() && holds; ++x) {
      if (sa.sheaf.stalk_size(x) == 0) {
        holds = false;
        detail = "empty stalk at " + sp.point_name(x);
        break;
      }
      try {
        PartialAction ax = stalk_action(sa, x);
        if (!is_universal(ax)) {
          holds = false;
          detail = "stalk at " + sp.point_name(x) + " is not universal";
        }
      } catch (ValidationError const& err) {
        holds = false;
        detail = "stalk at " + sp.point_name(x) + ": " + err.what();
      }
    }
    report.items.push_back({"U4", holds, detail});
  }

  {  // U5: the action commutes with generization wherever defined.
    bool holds = true;
    std::string detail;
    for (int elt = 0; elt < s.size() && holds; ++elt) {
      for (int t = 0; t < sa.action.carrier_size() && holds; ++t) {
        int const image = sa.action.apply(elt, t);
        if (image < 0) {
          continue;
        }
        auto const [x, i] = sa.unflat[t];
        auto const [xi, j] = sa.unflat[image];
        if (xi != x) {
          continue;  // reported by U3
        }
        for (int y = 0; y < sp.size() && holds; ++y) {
          if (!sp.leq(x, y)) {
            continue;
          }
          int const moved = sa.action.apply(elt, sa.flat[y][sa.sheaf.res(x, y, i)]);
          if (moved != sa.flat[y][sa.sheaf.res(x, y, j)]) {
            holds = false;
            detail = s.name(elt) + " does not commute with generization from " +
                     sp.point_name(x) + " to " + sp.point_name(y);
          }
        }
      }
    }
    report.items.push_back({"U5", holds, detail});
  }

  return report;
}

SheafAction tau(Bundle const& b) {
  if (auto principal = is_principal(b); !principal) {
    fail({"NotPrincipal", principal.witness->parts, principal.witness->detail});
  }
  InverseSemigroup const& s = b.logan().sgp();
  FiniteSpace const& sp = b.space();

  std::vector<PsiResult> per_stalk;
  std::vector<SetFunctor> stalk_functors;
  per_stalk.reserve(sp.size());
  for (int x = 0; x < sp.size(); ++x) {
    stalk_functors.push_back(b.stalk_functor(x));
    per_stalk.push_back(psi_with_classes(stalk_functors.back()));
  }

  // Stalks of the colimit sheaf = colimit classes of the stalk functors.
  std::vector<std::vector<std::string>> stalks(sp.size());
  for (int x = 0; x < sp.size(); ++x) {
    stalks[x] = per_stalk[x].action.carrier();
  }
  std::vector<std::vector<std::vector<int>>> res(
      sp.size(), std::vector<std::vector<int>>(sp.size()));
  for (int x = 0; x < sp.size(); ++x) {
    for (int y = 0; y < sp.size(); ++y) {
      if (!sp.leq(x, y)) {
        continue;
      }
      res[x][y].assign(per_stalk[x].action.carrier_size(), -1);
      for (int c = 0; c < per_stalk[x].action.carrier_size(); ++c) {
        // Push any representative through the bundle's generization.
        auto const [obj, p] = per_stalk[x].classes.members[c].front();
        int const q = b.sheaf(obj).res(x, y, p);
        res[x][y][c] = per_stalk[y].classes.class_of[obj][q];
#ifndef NDEBUG
        for (auto const& [obj2, p2] : per_stalk[x].classes.members[c]) {
          if (per_stalk[y].classes.class_of[obj2][b.sheaf(obj2).res(x, y, p2)] !=
              res[x][y][c]) {
            throw InternalCheckError("tau: generization depends on representative");
          }
        }
#endif
      }
    }
  }
  FiniteSheaf sheaf = FiniteSheaf::validate(b.space_ptr(), std::move(stalks),
                                            std::move(res));

  // Assemble the per-stalk actions into one action on the total set.
  std::vector<int> offset(sp.size(), 0);
  int total = 0;
  for (int x = 0; x < sp.size(); ++x) {
    offset[x] = total;
    total += per_stalk[x].action.carrier_size();
  }
  std::vector<std::vector<int>> act(s.size(), std::vector<int>(total, -1));
  for (int x = 0; x < sp.size(); ++x) {
    for (int elt = 0; elt < s.size(); ++elt) {
      for (int c = 0; c < per_stalk[x].action.carrier_size(); ++c) {
        int const image = per_stalk[x].action.apply(elt, c);
        if (image >= 0) {
          act[elt][offset[x] + c] = offset[x] + image;
        }
      }
    }
  }
  return SheafAction::make(b.logan().sgp_ptr(), std::move(sheaf), std::move(act));
}

Bundle rho(SheafAction const& sa) {
  auto report = check_universal_sheaf_action(sa);
  if (!report.ok()) {
    std::string detail;
    for (auto const& item : report.items) {
      if (!item.holds) {
        detail += (detail.empty() ? "" : "; ") + item.axiom +
                  (item.detail.empty() ? "" : " (" + item.detail + ")");
      }
    }
    fail({"NotUniversal", {}, detail});
  }

  FiniteSpace const& sp = *sa.space;
  LoganPtr logan = build_logan(sa.sgp);
  FiniteCategory const& cat = logan->cat();

  // Per object e: the subsheaf of points where e acts; position[obj][x][i]
  // is the index within the stalk of E(e) at x.
  std::vector<FiniteSheaf> sheaves;
  std::vector<std::vector<std::vector<int>>> position(
      cat.object_count(),
      std::vector<std::vector<int>>(sp.size()));
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    int const e = logan->idempotent_of(obj);
    std::vector<std::vector<std::string>> stalks(sp.size());
    std::vector<std::vector<int>> members(sp.size());
    for (int x = 0; x < sp.size(); ++x) {
      position[obj][x].assign(sa.sheaf.stalk_size(x), -1);
      for (int i = 0; i < sa.sheaf.stalk_size(x); ++i) {
        if (sa.action.defined(e, sa.flat[x][i])) {
          position[obj][x][i] = static_cast<int>(members[x].size());
          members[x].push_back(i);
          stalks[x].push_back(sa.sheaf.elem_label(x, i));
        }
      }
    }
    std::vector<std::vector<std::vector<int>>> res(
        sp.size(), std::vector<std::vector<int>>(sp.size()));
    for (int x = 0; x < sp.size(); ++x) {
      for (int y = 0; y < sp.size(); ++y) {
        if (!sp.leq(x, y)) {
          continue;
        }
        for (int i : members[x]) {
          int const j = sa.sheaf.res(x, y, i);
          if (position[obj][y][j] < 0) {
            throw InternalCheckError("rho: U2 violated after validation");
          }
          res[x][y].push_back(position[obj][y][j]);
        }
      }
    }
    sheaves.push_back(FiniteSheaf::validate(sa.space, std::move(stalks), std::move(res)));
  }

  std::vector<std::vector<std::vector<int>>> arrow_maps(cat.arrow_count());
  for (int a = 0; a < cat.arrow_count(); ++a) {
    auto const [f_elt, elt] = logan->arrow_pair(a);
    auto const& arr = cat.arrow(a);
    arrow_maps[a].resize(sp.size());
    for (int x = 0; x < sp.size(); ++x) {
      for (int i = 0; i < sa.sheaf.stalk_size(x); ++i) {
        if (position[arr.src][x][i] < 0) {
          continue;
        }
        int const image = sa.action.apply(elt, sa.flat[x][i]);
        if (image < 0) {
          throw InternalCheckError("rho: d(s) acts but s does not");
        }
        auto const [y, j] = sa.unflat[image];
        if (y != x || position[arr.tgt][x][j] < 0) {
          throw InternalCheckError("rho: arrow image escapes the target stalk");
        }
        arrow_maps[a][x].push_back(position[arr.tgt][x][j]);
      }
    }
  }

  return Bundle::validate(std::move(logan), sa.space, std::move(sheaves),
                          std::move(arrow_maps));
}

Verdict check_bundle_morphism(Bundle const& b, Bundle const& b2,
                              BundleMorphism const& m) {
  FiniteCategory const& cat = b.logan().cat();
  FiniteSpace const& sp = b.space();
  if (static_cast<int>(m.components.size()) != cat.object_count()) {
    fail({"MalformedMorphism", {}, "one component per object required"});
  }
  // Stalk-wise naturality in the object.
  for (int a = 0; a < cat.arrow_count(); ++a) {
    auto const& arr = cat.arrow(a);
    for (int x = 0; x < sp.size(); ++x) {
      for (int i = 0; i < b.sheaf(arr.src).stalk_size(x); ++i) {
        if (m.components[arr.tgt][x][b.arrow_map(a, x, i)] !=
            b2.arrow_map(a, x, m.components[arr.src][x][i])) {
          return Verdict::no({"NaturalityViolation", {arr.label, sp.point_name(x)}, ""});
        }
      }
    }
  }
  // Commutation with generization (sheaf map condition).
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    for (int x = 0; x < sp.size(); ++x) {
      for (int y = 0; y < sp.size(); ++y) {
        if (!sp.leq(x, y)) {
          continue;
        }
        for (int i = 0; i < b.sheaf(obj).stalk_size(x); ++i) {
          if (m.components[obj][y][b.sheaf(obj).res(x, y, i)] !=
              b2.sheaf(obj).res(x, y, m.components[obj][x][i])) {
            return Verdict::no({"NotContinuous",
                                {cat.object_name(obj), sp.point_name(x),
                                 sp.point_name(y)},
                                ""});
          }
        }
      }
    }
  }
  return Verdict::yes();
}

std::vector<int> tau_on_morphism(Bundle const& b, Bundle const& b2,
                                 BundleMorphism const& m, SheafAction const& ta,
                                 SheafAction const& tb) {
  if (auto v = check_bundle_morphism(b, b2, m); !v) {
    fail(*v.witness);
  }
  FiniteSpace const& sp = b.space();
  std::vector<int> out(ta.action.carrier_size(), -1);
  for (int x = 0; x < sp.size(); ++x) {
    auto fa = b.stalk_functor(x);
    auto fb = b2.stalk_functor(x);
    FunctorTransformation t;
    t.components.resize(fa.logan().cat().object_count());
    for (int obj = 0; obj < fa.logan().cat().object_count(); ++obj) {
      t.components[obj] = m.components[obj][x];
    }
    auto morphism = psi_on_transformation(fa, fb, t);
    for (int c = 0; c < morphism.source.carrier_size(); ++c) {
      // Identify classes by their labels within the stalk.
      auto const ti = ta.action.point_index(sp.point_name(x) + ":" +
                                            morphism.source.point_name(c));
      auto const tj = tb.action.point_index(sp.point_name(x) + ":" +
                                            morphism.target.point_name(morphism.map[c]));
      if (!ti || !tj) {
        throw InternalCheckError("tau_on_morphism: stalk labels do not match tau output");
      }
      out[*ti] = *tj;
    }
  }
  if (auto v = check_morphism(ta.action, tb.action, out); !v) {
    throw InternalCheckError("tau_on_morphism: transported map not equivariant");
  }
  return out;
}

BundleMorphism rho_on_morphism(SheafAction const& sa, SheafAction const& sb,
                               std::vector<int> const& total_map) {
  if (auto v = check_morphism(sa.action, sb.action, total_map); !v) {
    fail(*v.witness);
  }
  Bundle ba = rho(sa);
  Bundle bb = rho(sb);
  FiniteCategory const& cat = ba.logan().cat();
  FiniteSpace const& sp = *sa.space;

  BundleMorphism m;
  m.components.resize(cat.object_count());
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    m.components[obj].resize(sp.size());
    for (int x = 0; x < sp.size(); ++x) {
      for (int i = 0; i < ba.sheaf(obj).stalk_size(x); ++i) {
        // Element of E(e)_x -> its total index -> image -> position in E'(e)_x.
        auto const label = ba.sheaf(obj).elem_label(x, i);
        auto const src = sa.action.point_index(sp.point_name(x) + ":" + label);
        if (!src) {
          throw InternalCheckError("rho_on_morphism: missing total point");
        }
        auto const [y, j] = sb.unflat[total_map[*src]];
        if (y != x) {
          fail({"NotStalkPreserving", {sp.point_name(x)}, ""});
        }
        auto const pos = bb.sheaf(obj).elem_index(x, sb.sheaf.elem_label(y, j));
        if (!pos) {
          fail({"NotEquivariant", {cat.object_name(obj), sp.point_name(x)},
                "image does not lie in the target subsheaf"});
        }
        m.components[obj][x].push_back(*pos);
      }
    }
  }
  if (auto v = check_bundle_morphism(ba, bb, m); !v) {
    throw InternalCheckError("rho_on_morphism: transported family not a bundle morphism");
  }
  return m;
}

bool BundleEquivReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](RoundTripCheck const& c) { return c.pass; });
}

namespace {

// The canonical stalk-wise isomorphisms between B and rho(tau(B)) and
// their compatibility with generization.
void check_bundle_round_trip(std::string const& name, Bundle const& b,
                             BundleEquivReport& report) {
  SheafAction sa = tau(b);
  auto universal = check_universal_sheaf_action(sa);
  report.checks.push_back({name + ": tau lands in universal sheaf actions",
                           universal.ok(), ""});

  Bundle back = rho(sa);
  FiniteSpace const& sp = b.space();
  FiniteCategory const& cat = b.logan().cat();

  bool iso_ok = true;
  bool res_ok = true;
  std::string detail;
  // tau components per stalk: x -> [e,x].
  std::vector<FunctorTransformation> taus(sp.size());
  for (int x = 0; x < sp.size(); ++x) {
    auto fx = b.stalk_functor(x);
    auto tr = canonical_tau(fx);
    auto gx = back.stalk_functor(x);
    // rho(tau(b)) stalk must equal phi(psi(fx)) up to the stored labels.
    bool same = gx.object_sets() == tr.round_trip.object_sets() &&
                gx.arrow_maps() == tr.round_trip.arrow_maps();
    if (!same) {
      iso_ok = false;
      detail = "stalk functor mismatch at " + sp.point_name(x);
    }
    if (auto v = check_transformation(fx, tr.round_trip, tr.tau); !v) {
      iso_ok = false;
      detail = "tau not natural at " + sp.point_name(x);
    }
    for (int obj = 0; obj < cat.object_count() && iso_ok; ++obj) {
      std::vector<bool> hit(tr.round_trip.set_size(obj), false);
      if (static_cast<int>(tr.tau.components[obj].size()) !=
          tr.round_trip.set_size(obj)) {
        iso_ok = false;
        break;
      }
      for (int v : tr.tau.components[obj]) {
        if (hit[v]) {
          iso_ok = false;
        }
        hit[v] = true;
      }
    }
    taus[x] = tr.tau;
  }
  report.checks.push_back({name + ": rho(tau) isomorphic stalk-wise", iso_ok, detail});

  // The isomorphisms commute with generization.
  for (int obj = 0; obj < cat.object_count() && res_ok; ++obj) {
    for (int x = 0; x < sp.size() && res_ok; ++x) {
      for (int y = 0; y < sp.size() && res_ok; ++y) {
        if (!sp.leq(x, y)) {
          continue;
        }
        for (int i = 0; i < b.sheaf(obj).stalk_size(x); ++i) {
          if (back.sheaf(obj).res(x, y, taus[x].components[obj][i]) !=
              taus[y].components[obj][b.sheaf(obj).res(x, y, i)]) {
            res_ok = false;
          }
        }
      }
    }
  }
  report.checks.push_back({name + ": canonical isomorphism commutes with generization",
                           res_ok, ""});
}

void check_sheaf_action_round_trip(std::string const& name, SheafAction const& sa,
                                   BundleEquivReport& report) {
  Bundle b = rho(sa);
  auto principal = is_principal(b);
  report.checks.push_back({name + ": rho lands in principal bundles",
                           principal.value,
                           principal.witness ? format_witness(*principal.witness) : ""});
  if (!principal.value) {
    return;
  }
  SheafAction back = tau(b);
  FiniteSpace const& sp = *sa.space;

  // Per stalk, beta is an isomorphism of actions; it also has to commute
  // with generization.
  bool ok = back.action.carrier_size() == sa.action.carrier_size();
  std::vector<int> total_beta(back.action.carrier_size(), -1);
  std::string detail;
  for (int x = 0; x < sp.size() && ok; ++x) {
    PartialAction ax = stalk_action(sa, x);
    ActionMorphism beta = counit_beta(ax);
    if (beta.source.carrier_size() != back.sheaf.stalk_size(x)) {
      ok = false;
      detail = "stalk size mismatch at " + sp.point_name(x);
      break;
    }
    for (int c = 0; c < beta.source.carrier_size(); ++c) {
      // beta.source labels match tau's stalk labels by construction.
      if (back.sheaf.elem_label(x, c) != beta.source.point_name(c)) {
        ok = false;
        detail = "label mismatch at " + sp.point_name(x);
        break;
      }
      total_beta[back.flat[x][c]] = sa.flat[x][beta.map[c]];
    }
    std::vector<bool> hit(ax.carrier_size(), false);
    for (int c = 0; c < beta.source.carrier_size() && ok; ++c) {
      if (hit[beta.map[c]]) {
        ok = false;
        detail = "beta not injective at " + sp.point_name(x);
      }
      hit[beta.map[c]] = true;
    }
  }
  ok = ok && check_morphism(back.action, sa.action, total_beta).value;
  report.checks.push_back({name + ": tau(rho) isomorphic via beta", ok, detail});

  bool res_ok = ok;
  for (int x = 0; x < sp.size() && res_ok; ++x) {
    for (int y = 0; y < sp.size() && res_ok; ++y) {
      if (!sp.leq(x, y)) {
        continue;
      }
      for (int c = 0; c < back.sheaf.stalk_size(x); ++c) {
        auto const [px, i] = sa.unflat[total_beta[back.flat[x][c]]];
        int const lhs = sa.sheaf.res(px, y, i);
        auto const [py, j] = sa.unflat[total_beta[back.flat[y][back.sheaf.res(x, y, c)]]];
        if (py != y || lhs != j) {
          res_ok = false;
        }
      }
    }
  }
  report.checks.push_back({name + ": beta commutes with generization", res_ok, ""});
}

}  // namespace

BundleEquivReport verify_bundle_equiv(
    std::vector<std::pair<std::string, Bundle>> const& bundles,
    std::vector<std::pair<std::string, SheafAction>> const& sheaf_actions) {
  BundleEquivReport report;
  for (auto const& [name, b] : bundles) {
    check_bundle_round_trip(name, b, report);
  }
  for (auto const& [name, sa] : sheaf_actions) {
    check_sheaf_action_round_trip(name, sa, report);
  }
  return report;
}

Bundle constant_bundle(SetFunctor const& f, SpacePtr space) {
  FiniteCategory const& cat = f.logan().cat();
  int const n = space->size();
  std::vector<FiniteSheaf> sheaves;
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    std::vector<std::vector<std::string>> stalks(n, f.object_sets()[obj]);
    std::vector<std::vector<std::vector<int>>> res(n, std::vector<std::vector<int>>(n));
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (space->leq(x, y)) {
          res[x][y].resize(f.set_size(obj));
          std::iota(res[x][y].begin(), res[x][y].end(), 0);
        }
      }
    }
    sheaves.push_back(FiniteSheaf::validate(space, std::move(stalks), std::move(res)));
  }
  std::vector<std::vector<std::vector<int>>> arrow_maps(cat.arrow_count());
  for (int a = 0; a < cat.arrow_count(); ++a) {
    arrow_maps[a].assign(n, f.arrow_maps()[a]);
  }
  return Bundle::validate(f.logan_ptr(), std::move(space), std::move(sheaves),
                          std::move(arrow_maps));
}

SheafAction sheaf_action_over_point(PartialAction const& a) {
  SpacePtr space = one_point_space();
  std::vector<std::vector<std::string>> stalks = {a.carrier()};
  std::vector<std::vector<std::vector<int>>> res(1, std::vector<std::vector<int>>(1));
  res[0][0].resize(a.carrier_size());
  std::iota(res[0][0].begin(), res[0][0].end(), 0);
  FiniteSheaf sheaf = FiniteSheaf::validate(space, std::move(stalks), std::move(res));
  return SheafAction::make(a.sgp_ptr(), std::move(sheaf), a.table());
}

}  // namespace invtopos
