#include "invtopos/phi_psi.hpp"

#include <algorithm>
#include <map>

namespace invtopos {

ColimitClasses colimit_classes(SetFunctor const& f) {
  FiniteCategory const& cat = f.logan().cat();
  std::vector<int> offset(cat.object_count(), 0);
  int total = 0;
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    offset[obj] = total;
    total += f.set_size(obj);
  }

  UnionFind uf = colimit_union_find(f);

  ColimitClasses out;
  out.class_of.resize(cat.object_count());
  std::map<int, int> class_id;  // union-find root -> class id, in pair order
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    out.class_of[obj].assign(f.set_size(obj), -1);
    for (int p = 0; p < f.set_size(obj); ++p) {
      int const root = uf.find(offset[obj] + p);
      auto [it, inserted] = class_id.emplace(root, static_cast<int>(out.members.size()));
      if (inserted) {
        out.members.emplace_back();
      }
      out.class_of[obj][p] = it->second;
      out.members[it->second].emplace_back(obj, p);
    }
  }
  for (auto& cls : out.members) {
    std::sort(cls.begin(), cls.end());
  }
  out.labels.reserve(out.members.size());
  for (auto const& cls : out.members) {
    auto const [obj, p] = cls.front();
    out.labels.push_back("[" + cat.object_name(obj) + "," + f.elem_label(obj, p) + "]");
  }
  return out;
}

SetFunctor phi(PartialAction const& a, LoganPtr logan) {
  FiniteCategory const& cat = logan->cat();

  std::vector<std::vector<std::string>> obj_elems(cat.object_count());
  // position of a carrier point in the domain list of each object
  std::vector<std::vector<int>> pos(cat.object_count(),
                                    std::vector<int>(a.carrier_size(), -1));
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    int const e = logan->idempotent_of(obj);
    for (int x : a.domain_of(e)) {
      pos[obj][x] = static_cast<int>(obj_elems[obj].size());
      obj_elems[obj].push_back(a.point_name(x));
    }
  }

  std::vector<std::vector<int>> arrow_maps(cat.arrow_count());
  for (int ar = 0; ar < cat.arrow_count(); ++ar) {
    auto const [tgt_elt, elt] = logan->arrow_pair(ar);
    int const src_obj = cat.arrow(ar).src;
    int const tgt_obj = cat.arrow(ar).tgt;
    int const e = logan->idempotent_of(src_obj);
    arrow_maps[ar].reserve(obj_elems[src_obj].size());
    for (int x : a.domain_of(e)) {
      int const y = a.apply(elt, x);
      if (y < 0 || pos[tgt_obj][y] < 0) {
        throw InternalCheckError("phi: d(s).x defined but s.x missing from target set");
      }
      arrow_maps[ar].push_back(pos[tgt_obj][y]);
    }
  }

  return SetFunctor::validate(std::move(logan), std::move(obj_elems),
                              std::move(arrow_maps));
}

SetFunctor phi(PartialAction const& a) { return phi(a, build_logan(a.sgp_ptr())); }

PsiResult psi_with_classes(SetFunctor const& f) {
  if (auto tf = is_torsion_free(f); !tf) {
    fail(*tf.witness);
  }
  LoganCategory const& logan = f.logan();
  InverseSemigroup const& s = logan.sgp();
  ColimitClasses classes = colimit_classes(f);

  int const k = static_cast<int>(classes.members.size());
  // Which element (unique, by torsion-freeness) a class holds over each
  // object; -1 when the object does not meet the class.
  std::vector<std::vector<int>> elem_over(k, std::vector<int>(logan.object_count(), -1));
  for (int c = 0; c < k; ++c) {
    for (auto const& [obj, p] : classes.members[c]) {
      if (elem_over[c][obj] >= 0) {
        throw InternalCheckError("psi: torsion-free functor has a doubled object");
      }
      elem_over[c][obj] = p;
    }
  }

  std::vector<std::vector<int>> act(s.size(), std::vector<int>(k, -1));
  for (int elt = 0; elt < s.size(); ++elt) {
    int const src_obj = logan.object_of(s.d(elt));
    int const tgt_obj = logan.object_of(s.r(elt));
    int const ar = logan.arrow_index(s.r(elt), elt);
    for (int c = 0; c < k; ++c) {
      int const p = elem_over[c][src_obj];
      if (p < 0) {
        continue;
      }
      act[elt][c] = classes.class_of[tgt_obj][f.map(ar, p)];
    }
  }

#ifndef NDEBUG
  // Well-definedness over every representative, not just the stored one.
  for (int elt = 0; elt < s.size(); ++elt) {
    int const src_obj = logan.object_of(s.d(elt));
    int const tgt_obj = logan.object_of(s.r(elt));
    int const ar = logan.arrow_index(s.r(elt), elt);
    for (int c = 0; c < k; ++c) {
      for (auto const& [obj, p] : classes.members[c]) {
        if (obj == src_obj &&
            act[elt][c] != classes.class_of[tgt_obj][f.map(ar, p)]) {
          throw InternalCheckError("psi: action value depends on the representative");
        }
      }
    }
  }
#endif

  PsiResult out{PartialAction::validate(logan.sgp_ptr(), classes.labels, std::move(act)),
                std::move(classes)};
  return out;
}

PartialAction psi(SetFunctor const& f) { return psi_with_classes(f).action; }

bool preserves_pullbacks(SetFunctor const& f) {
  return is_strict(psi(f)).value;
}

FunctorTransformation phi_on_morphism(ActionMorphism const& m,
                                      SetFunctor const& phi_src,
                                      SetFunctor const& phi_tgt) {
  FiniteCategory const& cat = phi_src.logan().cat();
  FunctorTransformation t;
  t.components.resize(cat.object_count());
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    t.components[obj].reserve(phi_src.set_size(obj));
    for (int p = 0; p < phi_src.set_size(obj); ++p) {
      auto const x = m.source.point_index(phi_src.elem_label(obj, p));
      if (!x) {
        throw InternalCheckError("phi_on_morphism: functor is not phi of the source");
      }
      auto const q = phi_tgt.elem_index(obj, m.target.point_name(m.map[*x]));
      if (!q) {
        throw InternalCheckError("phi_on_morphism: image escapes the target domain");
      }
      t.components[obj].push_back(*q);
    }
  }
  if (auto v = check_transformation(phi_src, phi_tgt, t); !v) {
    throw InternalCheckError("phi_on_morphism: naturality failed: " +
                             format_witness(*v.witness));
  }
  return t;
}

ActionMorphism psi_on_transformation(SetFunctor const& f, SetFunctor const& g,
                                     FunctorTransformation const& t) {
  if (auto v = check_transformation(f, g, t); !v) {
    fail(*v.witness);
  }
  PsiResult fr = psi_with_classes(f);
  PsiResult gr = psi_with_classes(g);
  std::vector<int> map(fr.action.carrier_size(), -1);
  for (int c = 0; c < fr.action.carrier_size(); ++c) {
    for (auto const& [obj, p] : fr.classes.members[c]) {
      int const image = gr.classes.class_of[obj][t.components[obj][p]];
      if (map[c] < 0) {
        map[c] = image;
      } else if (map[c] != image) {
        throw InternalCheckError("psi_on_transformation: image class depends on representative");
      }
    }
  }
  ActionMorphism out{fr.action, gr.action, std::move(map)};
  if (auto v = check_morphism(out.source, out.target, out.map); !v) {
    throw InternalCheckError("psi_on_transformation: not equivariant: " +
                             format_witness(*v.witness));
  }
  return out;
}

ActionMorphism counit_beta(PartialAction const& a) {
  SetFunctor f = phi(a);
  PsiResult r = psi_with_classes(f);
  std::vector<int> map(r.action.carrier_size(), -1);
  for (int c = 0; c < r.action.carrier_size(); ++c) {
    auto const [obj, p] = r.classes.members[c].front();
    auto const x = a.point_index(f.elem_label(obj, p));
    if (!x) {
      throw InternalCheckError("counit_beta: unknown carrier label");
    }
    map[c] = *x;
#ifndef NDEBUG
    // Every pair in one class lies over the same carrier point.
    for (auto const& [obj2, p2] : r.classes.members[c]) {
      if (a.point_index(f.elem_label(obj2, p2)) != x) {
        throw InternalCheckError("counit_beta: class mixes carrier points");
      }
    }
#endif
  }
  ActionMorphism out{std::move(r.action), a, std::move(map)};
  if (auto v = check_morphism(out.source, out.target, out.map); !v) {
    throw InternalCheckError("counit_beta: not equivariant: " +
                             format_witness(*v.witness));
  }
  return out;
}

ActionMorphism coreflection_factor(ActionMorphism const& g) {
  PartialAction const& a = g.source;
  if (auto conn = is_connected(a); !conn) {
    fail({"NotConnected", conn.witness->parts, "coreflection factor needs a connected source"});
  }
  SetFunctor fb = phi(g.target);
  PsiResult rb = psi_with_classes(fb);
  InverseSemigroup const& s = a.sgp();
  LoganCategory const& logan = fb.logan();

  std::vector<int> map(a.carrier_size(), -1);
  for (int x = 0; x < a.carrier_size(); ++x) {
    for (int e : s.idempotents()) {
      if (!a.defined(e, x)) {
        continue;
      }
      int const obj = logan.object_of(e);
      auto const p = fb.elem_index(obj, g.target.point_name(g.map[x]));
      if (!p) {
        throw InternalCheckError("coreflection_factor: e.g(x) undefined in target");
      }
      map[x] = rb.classes.class_of[obj][*p];
      break;
    }
    if (map[x] < 0) {
      throw InternalCheckError("coreflection_factor: effective action has an uncovered point");
    }
  }

  ActionMorphism out{a, rb.action, std::move(map)};
  if (auto v = check_morphism(out.source, out.target, out.map); !v) {
    throw InternalCheckError("coreflection_factor: not equivariant: " +
                             format_witness(*v.witness));
  }
  // beta_B o f = g by construction; re-check all points.
  ActionMorphism beta = counit_beta(g.target);
  for (int x = 0; x < a.carrier_size(); ++x) {
    if (beta.map[out.map[x]] != g.map[x]) {
      throw InternalCheckError("coreflection_factor: beta o f differs from g");
    }
  }
  return out;
}

TauResult canonical_tau(SetFunctor const& f) {
  PsiResult r = psi_with_classes(f);
  SetFunctor round_trip = phi(r.action, f.logan_ptr());
  FiniteCategory const& cat = f.logan().cat();

  FunctorTransformation tau;
  tau.components.resize(cat.object_count());
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    tau.components[obj].reserve(f.set_size(obj));
    for (int p = 0; p < f.set_size(obj); ++p) {
      int const cls = r.classes.class_of[obj][p];
      auto const q = round_trip.elem_index(obj, r.action.point_name(cls));
      if (!q) {
        throw InternalCheckError("canonical_tau: class missing from round-trip set");
      }
      tau.components[obj].push_back(*q);
    }
  }
  return TauResult{std::move(round_trip), std::move(tau)};
}

bool RoundTripReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](RoundTripCheck const& c) { return c.pass; });
}

namespace {

bool component_bijective(std::vector<int> const& comp, int target_size) {
  if (static_cast<int>(comp.size()) != target_size) {
    return false;
  }
  std::vector<bool> hit(target_size, false);
  for (int v : comp) {
    if (hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  return true;
}

}  // namespace

RoundTripReport verify_round_trips(
    std::vector<std::pair<std::string, PartialAction>> const& actions,
    std::vector<std::pair<std::string, SetFunctor>> const& functors) {
  RoundTripReport report;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  for (auto const& [name, f] : functors) {
    auto tf = is_torsion_free(f);
    if (!tf) {
      add(name + ": torsion-free input expected", false, format_witness(*tf.witness));
      continue;
    }
    PsiResult r = psi_with_classes(f);
    auto conn = is_connected(r.action);
    add(name + ": psi is connected", conn.value,
        conn.witness ? format_witness(*conn.witness) : "");

    // Injectivity of every s on its domain.
    bool injective = true;
    for (int s = 0; s < r.action.sgp().size() && injective; ++s) {
      std::vector<bool> seen(r.action.carrier_size(), false);
      for (int x = 0; x < r.action.carrier_size(); ++x) {
        int const y = r.action.apply(s, x);
        if (y >= 0) {
          injective = injective && !seen[y];
          seen[y] = true;
        }
      }
    }
    add(name + ": psi acts by partial bijections", injective);

    TauResult tr = canonical_tau(f);
    bool tau_iso = check_transformation(f, tr.round_trip, tr.tau).value;
    for (int obj = 0; obj < f.logan().cat().object_count() && tau_iso; ++obj) {
      tau_iso = component_bijective(tr.tau.components[obj], tr.round_trip.set_size(obj));
    }
    add(name + ": tau is a natural isomorphism onto phi(psi)", tau_iso);
  }

  for (auto const& [name, a] : actions) {
    auto tf = is_torsion_free(phi(a));
    add(name + ": phi is torsion-free", tf.value,
        tf.witness ? format_witness(*tf.witness) : "");

    ActionMorphism beta = counit_beta(a);
    bool const surjective = [&] {
      std::vector<bool> hit(a.carrier_size(), false);
      for (int v : beta.map) {
        hit[v] = true;
      }
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }();
    add(name + ": beta is surjective", surjective);

    bool const connected = is_connected(a).value;
    bool const bijective = component_bijective(beta.map, a.carrier_size());
    add(name + ": beta bijective iff connected", bijective == connected,
        connected ? "connected action" : "non-connected action");

    if (connected) {
      // The inverse of beta must again be equivariant.
      std::vector<int> inverse(a.carrier_size(), -1);
      bool ok = bijective;
      for (int c = 0; ok && c < static_cast<int>(beta.map.size()); ++c) {
        inverse[beta.map[c]] = c;
      }
      ok = ok && check_morphism(a, beta.source, inverse).value;
      add(name + ": beta is an isomorphism of actions", ok);
    }
  }

  return report;
}

}  // namespace invtopos
