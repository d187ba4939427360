#include "invtopos/functor_tools.hpp"

#include <algorithm>

namespace invtopos {

SetFunctor SetFunctor::validate(LoganPtr logan,
                                std::vector<std::vector<std::string>> obj_elems,
                                std::vector<std::vector<int>> arrow_maps) {
  FiniteCategory const& cat = logan->cat();
  if (static_cast<int>(obj_elems.size()) != cat.object_count() ||
      static_cast<int>(arrow_maps.size()) != cat.arrow_count()) {
    fail({"MalformedFunctor", {}, "assignments missing for some object or arrow"});
  }
  for (int a = 0; a < cat.arrow_count(); ++a) {
    auto const& arr = cat.arrow(a);
    int const src_size = static_cast<int>(obj_elems[arr.src].size());
    int const tgt_size = static_cast<int>(obj_elems[arr.tgt].size());
    if (static_cast<int>(arrow_maps[a].size()) != src_size) {
      fail({"MalformedFunctor", {arr.label}, "map length does not match source set"});
    }
    for (int v : arrow_maps[a]) {
      if (v < 0 || v >= tgt_size) {
        fail({"MalformedFunctor", {arr.label}, "image out of range"});
      }
    }
  }

  for (int obj = 0; obj < cat.object_count(); ++obj) {
    auto const& id_map = arrow_maps[cat.identity(obj)];
    for (int i = 0; i < static_cast<int>(id_map.size()); ++i) {
      if (id_map[i] != i) {
        fail({"IdentityViolation", {cat.object_name(obj)}, ""});
      }
    }
  }

  for (int g = 0; g < cat.arrow_count(); ++g) {
    for (int f = 0; f < cat.arrow_count(); ++f) {
      int const gf = cat.compose(g, f);
      if (gf < 0) {
        continue;
      }
      for (int i = 0; i < static_cast<int>(arrow_maps[f].size()); ++i) {
        if (arrow_maps[gf][i] != arrow_maps[g][arrow_maps[f][i]]) {
          fail({"CompositionViolation", {cat.arrow(g).label, cat.arrow(f).label}, ""});
        }
      }
    }
  }

  SetFunctor out;
  out.logan_ = std::move(logan);
  out.obj_elems_ = std::move(obj_elems);
  out.arrow_maps_ = std::move(arrow_maps);
  return out;
}

std::optional<int> SetFunctor::elem_index(int obj, std::string_view label) const {
  for (int i = 0; i < set_size(obj); ++i) {
    if (obj_elems_[obj][i] == label) {
      return i;
    }
  }
  return std::nullopt;
}

int SetFunctor::total_size() const {
  int total = 0;
  for (auto const& set : obj_elems_) {
    total += static_cast<int>(set.size());
  }
  return total;
}

ElementsCategory category_of_elements(SetFunctor const& f) {
  FiniteCategory const& base = f.logan().cat();

  std::vector<std::string> object_names;
  std::vector<std::pair<int, int>> pair_of;
  std::vector<std::vector<int>> object_at(base.object_count());
  for (int obj = 0; obj < base.object_count(); ++obj) {
    object_at[obj].resize(f.set_size(obj));
    for (int p = 0; p < f.set_size(obj); ++p) {
      object_at[obj][p] = static_cast<int>(object_names.size());
      object_names.push_back("(" + base.object_name(obj) + "|" +
                             f.elem_label(obj, p) + ")");
      pair_of.emplace_back(obj, p);
    }
  }

  std::vector<CatArrow> arrows;
  std::vector<int> base_arrow_of;
  // arrow_at[base arrow][source element] -> elements-category arrow
  std::vector<std::vector<int>> arrow_at(base.arrow_count());
  for (int a = 0; a < base.arrow_count(); ++a) {
    auto const& arr = base.arrow(a);
    arrow_at[a].resize(f.set_size(arr.src));
    for (int p = 0; p < f.set_size(arr.src); ++p) {
      arrow_at[a][p] = static_cast<int>(arrows.size());
      arrows.push_back({object_at[arr.src][p], object_at[arr.tgt][f.map(a, p)],
                        arr.label});
      base_arrow_of.push_back(a);
    }
  }

  std::vector<int> identities(object_names.size(), -1);
  for (size_t obj = 0; obj < pair_of.size(); ++obj) {
    auto const [c, p] = pair_of[obj];
    identities[obj] = arrow_at[base.identity(c)][p];
  }

  int const m = static_cast<int>(arrows.size());
  std::vector<std::vector<int>> compose(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g) {
    for (int fa = 0; fa < m; ++fa) {
      if (arrows[fa].tgt != arrows[g].src) {
        continue;
      }
      int const bg = base_arrow_of[g];
      int const bf = base_arrow_of[fa];
      int const src_elem = pair_of[arrows[fa].src].second;
      compose[g][fa] = arrow_at[base.compose(bg, bf)][src_elem];
    }
  }

  return ElementsCategory{
      FiniteCategory(std::move(object_names), std::move(arrows),
                     std::move(identities), std::move(compose)),
      std::move(pair_of), std::move(base_arrow_of), std::move(object_at)};
}

namespace {

// Pair (object, element) <-> dense index, plus the union-find closure of
// the idempotent-arrow relation. Shared by is_torsion_free and psi.
struct PairIndex {
  std::vector<int> offset;
  int total = 0;

  explicit PairIndex(SetFunctor const& f) {
    offset.resize(f.logan().cat().object_count(), 0);
    for (int obj = 0; obj < f.logan().cat().object_count(); ++obj) {
      offset[obj] = total;
      total += f.set_size(obj);
    }
  }

  int at(int obj, int p) const { return offset[obj] + p; }
};

}  // namespace

UnionFind colimit_union_find(SetFunctor const& f) {
  LoganCategory const& logan = f.logan();
  InverseSemigroup const& s = logan.sgp();
  PairIndex idx(f);
  UnionFind uf(idx.total);
  // Single steps (e, x) ~ (e', F(e',e)(x)) along arrows whose semigroup
  // component is an idempotent e with target e' >= e.
  for (int a = 0; a < logan.cat().arrow_count(); ++a) {
    auto const [tgt_elt, elt] = logan.arrow_pair(a);
    if (!s.is_idempotent(elt)) {
      continue;
    }
    int const src_obj = logan.cat().arrow(a).src;
    int const tgt_obj = logan.cat().arrow(a).tgt;
    for (int p = 0; p < f.set_size(src_obj); ++p) {
      uf.unite(idx.at(src_obj, p), idx.at(tgt_obj, f.map(a, p)));
    }
  }
  return uf;
}

Verdict is_torsion_free(SetFunctor const& f) {
  PairIndex idx(f);
  UnionFind uf = colimit_union_find(f);
  for (int obj = 0; obj < f.logan().cat().object_count(); ++obj) {
    for (int p = 0; p < f.set_size(obj); ++p) {
      for (int q = p + 1; q < f.set_size(obj); ++q) {
        if (uf.same(idx.at(obj, p), idx.at(obj, q))) {
          return Verdict::no({"NotTorsionFree",
                              {f.logan().cat().object_name(obj),
                               f.elem_label(obj, p), f.elem_label(obj, q)},
                              "distinct elements identified over one object"});
        }
      }
    }
  }
  return Verdict::yes();
}

namespace {

Verdict check_f1_f2(FiniteCategory const& el) {
  if (el.object_count() == 0) {
    return Verdict::no({"F1", {}, "category of elements is empty"});
  }
  for (int i = 0; i < el.object_count(); ++i) {
    for (int j = i; j < el.object_count(); ++j) {
      bool found = false;
      for (int k = 0; k < el.object_count() && !found; ++k) {
        found = !el.hom(k, i).empty() && !el.hom(k, j).empty();
      }
      if (!found) {
        return Verdict::no({"F2", {el.object_name(i), el.object_name(j)},
                            "no common source span"});
      }
    }
  }
  return Verdict::yes();
}

Verdict check_f3(FiniteCategory const& el) {
  for (int u = 0; u < el.arrow_count(); ++u) {
    for (int v = u + 1; v < el.arrow_count(); ++v) {
      if (el.arrow(u).src != el.arrow(v).src || el.arrow(u).tgt != el.arrow(v).tgt) {
        continue;
      }
      bool found = false;
      for (int w = 0; w < el.arrow_count() && !found; ++w) {
        if (el.arrow(w).tgt == el.arrow(u).src) {
          found = el.compose(u, w) == el.compose(v, w);
        }
      }
      if (!found) {
        return Verdict::no({"F3",
                            {el.object_name(el.arrow(u).src),
                             el.object_name(el.arrow(u).tgt), el.arrow(u).label,
                             el.arrow(v).label},
                            "parallel pair admits no equalizing arrow"});
      }
    }
  }
  return Verdict::yes();
}

}  // namespace

Verdict is_directed(SetFunctor const& f) {
  return check_f1_f2(category_of_elements(f).cat);
}

Verdict is_filtered(SetFunctor const& f) {
  auto el = category_of_elements(f);
  if (auto v = check_f1_f2(el.cat); !v) {
    return v;
  }
  return check_f3(el.cat);
}

Verdict check_transformation(SetFunctor const& f, SetFunctor const& g,
                             FunctorTransformation const& t) {
  FiniteCategory const& cat = f.logan().cat();
  if (static_cast<int>(t.components.size()) != cat.object_count()) {
    fail({"MalformedTransformation", {}, "one component per object required"});
  }
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    if (static_cast<int>(t.components[obj].size()) != f.set_size(obj)) {
      fail({"MalformedTransformation", {cat.object_name(obj)}, "component size mismatch"});
    }
    for (int v : t.components[obj]) {
      if (v < 0 || v >= g.set_size(obj)) {
        fail({"MalformedTransformation", {cat.object_name(obj)}, "image out of range"});
      }
    }
  }
  for (int a = 0; a < cat.arrow_count(); ++a) {
    auto const& arr = cat.arrow(a);
    for (int p = 0; p < f.set_size(arr.src); ++p) {
      if (g.map(a, t.components[arr.src][p]) != t.components[arr.tgt][f.map(a, p)]) {
        return Verdict::no({"NaturalityViolation", {arr.label, f.elem_label(arr.src, p)}, ""});
      }
    }
  }
  return Verdict::yes();
}

std::vector<FunctorTransformation> enumerate_transformations(
    SetFunctor const& f, SetFunctor const& g, long long cap) {
  FiniteCategory const& cat = f.logan().cat();
  long long total = 1;
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    for (int p = 0; p < f.set_size(obj); ++p) {
      if (g.set_size(obj) == 0) {
        return {};
      }
      total *= g.set_size(obj);
      if (total > cap) {
        fail({"TooLarge", {}, "transformation enumeration exceeds cap"});
      }
    }
  }

  // Flatten all component slots in object order.
  std::vector<std::pair<int, int>> slots;
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    for (int p = 0; p < f.set_size(obj); ++p) {
      slots.emplace_back(obj, p);
    }
  }
  std::vector<FunctorTransformation> out;
  FunctorTransformation t;
  t.components.resize(cat.object_count());
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    t.components[obj].assign(f.set_size(obj), 0);
  }
  while (true) {
    if (check_transformation(f, g, t).value) {
      out.push_back(t);
    }
    int pos = static_cast<int>(slots.size()) - 1;
    while (pos >= 0) {
      auto const [obj, p] = slots[pos];
      if (t.components[obj][p] + 1 < g.set_size(obj)) {
        ++t.components[obj][p];
        break;
      }
      t.components[obj][p] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
  }
  return out;
}

SetFunctor constant_singleton(LoganPtr logan) {
  FiniteCategory const& cat = logan->cat();
  std::vector<std::vector<std::string>> obj_elems(cat.object_count(), {"*"});
  std::vector<std::vector<int>> arrow_maps(cat.arrow_count(), {0});
  return SetFunctor::validate(std::move(logan), std::move(obj_elems),
                              std::move(arrow_maps));
}

}  // namespace invtopos
