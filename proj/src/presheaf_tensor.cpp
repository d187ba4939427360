#include "invtopos/presheaf_tensor.hpp"

#include <algorithm>
#include <map>

namespace invtopos {

Presheaf Presheaf::validate(LoganPtr logan,
                            std::vector<std::vector<std::string>> obj_elems,
                            std::vector<std::vector<int>> arrow_maps) {
  FiniteCategory const& cat = logan->cat();
  if (static_cast<int>(obj_elems.size()) != cat.object_count() ||
      static_cast<int>(arrow_maps.size()) != cat.arrow_count()) {
    fail({"MalformedPresheaf", {}, "assignments missing for some object or arrow"});
  }
  for (int a = 0; a < cat.arrow_count(); ++a) {
    auto const& arr = cat.arrow(a);
    if (arrow_maps[a].size() != obj_elems[arr.tgt].size()) {
      fail({"MalformedPresheaf", {arr.label}, "map length does not match target set"});
    }
    for (int v : arrow_maps[a]) {
      if (v < 0 || v >= static_cast<int>(obj_elems[arr.src].size())) {
        fail({"MalformedPresheaf", {arr.label}, "image out of range"});
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
      // P(g o f) = P(f) o P(g), both defined on the target set of g.
      for (int i = 0; i < static_cast<int>(arrow_maps[g].size()); ++i) {
        if (arrow_maps[gf][i] != arrow_maps[f][arrow_maps[g][i]]) {
          fail({"CompositionViolation", {cat.arrow(g).label, cat.arrow(f).label}, ""});
        }
      }
    }
  }

  Presheaf out;
  out.logan_ = std::move(logan);
  out.obj_elems_ = std::move(obj_elems);
  out.arrow_maps_ = std::move(arrow_maps);
  return out;
}

std::optional<int> Presheaf::elem_index(int obj, std::string_view label) const {
  for (int i = 0; i < set_size(obj); ++i) {
    if (obj_elems_[obj][i] == label) {
      return i;
    }
  }
  return std::nullopt;
}

int Presheaf::total_size() const {
  int total = 0;
  for (auto const& set : obj_elems_) {
    total += static_cast<int>(set.size());
  }
  return total;
}

Presheaf representable(LoganPtr logan, int e) {
  FiniteCategory const& cat = logan->cat();
  int const tgt = logan->object_of(e);

  std::vector<std::vector<std::string>> obj_elems(cat.object_count());
  std::vector<std::vector<int>> hom_arrows(cat.object_count());
  for (int c = 0; c < cat.object_count(); ++c) {
    for (int h : cat.hom(c, tgt)) {
      hom_arrows[c].push_back(h);
      obj_elems[c].push_back(cat.arrow(h).label);
    }
  }

  std::vector<std::vector<int>> maps(cat.arrow_count());
  for (int u = 0; u < cat.arrow_count(); ++u) {
    auto const& arr = cat.arrow(u);
    maps[u].reserve(hom_arrows[arr.tgt].size());
    for (int h : hom_arrows[arr.tgt]) {
      int const hu = cat.compose(h, u);
      auto it = std::find(hom_arrows[arr.src].begin(), hom_arrows[arr.src].end(), hu);
      maps[u].push_back(static_cast<int>(it - hom_arrows[arr.src].begin()));
    }
  }
  return Presheaf::validate(std::move(logan), std::move(obj_elems), std::move(maps));
}

Presheaf terminal_presheaf(LoganPtr logan) {
  FiniteCategory const& cat = logan->cat();
  std::vector<std::vector<std::string>> obj_elems(cat.object_count(), {"*"});
  std::vector<std::vector<int>> maps(cat.arrow_count(), {0});
  return Presheaf::validate(std::move(logan), std::move(obj_elems), std::move(maps));
}

Verdict check_presheaf_morphism(Presheaf const& p, Presheaf const& q,
                                PresheafMorphism const& m) {
  FiniteCategory const& cat = p.logan().cat();
  if (static_cast<int>(m.components.size()) != cat.object_count()) {
    fail({"MalformedMorphism", {}, "one component per object required"});
  }
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    if (static_cast<int>(m.components[obj].size()) != p.set_size(obj)) {
      fail({"MalformedMorphism", {cat.object_name(obj)}, "component size mismatch"});
    }
    for (int v : m.components[obj]) {
      if (v < 0 || v >= q.set_size(obj)) {
        fail({"MalformedMorphism", {cat.object_name(obj)}, "image out of range"});
      }
    }
  }
  for (int u = 0; u < cat.arrow_count(); ++u) {
    auto const& arr = cat.arrow(u);
    for (int i = 0; i < p.set_size(arr.tgt); ++i) {
      if (q.translate(u, m.components[arr.tgt][i]) !=
          m.components[arr.src][p.translate(u, i)]) {
        return Verdict::no({"NaturalityViolation", {arr.label, p.elem_label(arr.tgt, i)}, ""});
      }
    }
  }
  return Verdict::yes();
}

std::vector<PresheafMorphism> enumerate_presheaf_morphisms(Presheaf const& p,
                                                           Presheaf const& q,
                                                           long long cap) {
  FiniteCategory const& cat = p.logan().cat();
  long long total = 1;
  std::vector<std::pair<int, int>> slots;
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    for (int i = 0; i < p.set_size(obj); ++i) {
      if (q.set_size(obj) == 0) {
        return {};
      }
      total *= q.set_size(obj);
      if (total > cap) {
        fail({"TooLarge", {}, "presheaf morphism enumeration exceeds cap"});
      }
      slots.emplace_back(obj, i);
    }
  }
  std::vector<PresheafMorphism> out;
  PresheafMorphism m;
  m.components.resize(cat.object_count());
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    m.components[obj].assign(p.set_size(obj), 0);
  }
  while (true) {
    if (check_presheaf_morphism(p, q, m).value) {
      out.push_back(m);
    }
    int pos = static_cast<int>(slots.size()) - 1;
    while (pos >= 0) {
      auto const [obj, i] = slots[pos];
      if (m.components[obj][i] + 1 < q.set_size(obj)) {
        ++m.components[obj][i];
        break;
      }
      m.components[obj][i] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
  }
  return out;
}

PresheafProduct presheaf_product(Presheaf const& p, Presheaf const& q) {
  FiniteCategory const& cat = p.logan().cat();
  std::vector<std::vector<std::string>> obj_elems(cat.object_count());
  PresheafMorphism left, right;
  left.components.resize(cat.object_count());
  right.components.resize(cat.object_count());
  // pair (i, j) at position i * |Q| + j
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    for (int i = 0; i < p.set_size(obj); ++i) {
      for (int j = 0; j < q.set_size(obj); ++j) {
        obj_elems[obj].push_back("(" + p.elem_label(obj, i) + "|" +
                                 q.elem_label(obj, j) + ")");
        left.components[obj].push_back(i);
        right.components[obj].push_back(j);
      }
    }
  }
  std::vector<std::vector<int>> maps(cat.arrow_count());
  for (int u = 0; u < cat.arrow_count(); ++u) {
    auto const& arr = cat.arrow(u);
    maps[u].reserve(obj_elems[arr.tgt].size());
    for (int i = 0; i < p.set_size(arr.tgt); ++i) {
      for (int j = 0; j < q.set_size(arr.tgt); ++j) {
        maps[u].push_back(p.translate(u, i) * q.set_size(arr.src) +
                          q.translate(u, j));
      }
    }
  }
  PresheafProduct out{
      Presheaf::validate(p.logan_ptr(), std::move(obj_elems), std::move(maps)),
      std::move(left), std::move(right)};
  return out;
}

Presheaf presheaf_sum(Presheaf const& p, Presheaf const& q) {
  FiniteCategory const& cat = p.logan().cat();
  std::vector<std::vector<std::string>> obj_elems(cat.object_count());
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    for (int i = 0; i < p.set_size(obj); ++i) {
      obj_elems[obj].push_back("l." + p.elem_label(obj, i));
    }
    for (int j = 0; j < q.set_size(obj); ++j) {
      obj_elems[obj].push_back("r." + q.elem_label(obj, j));
    }
  }
  std::vector<std::vector<int>> maps(cat.arrow_count());
  for (int u = 0; u < cat.arrow_count(); ++u) {
    auto const& arr = cat.arrow(u);
    for (int i = 0; i < p.set_size(arr.tgt); ++i) {
      maps[u].push_back(p.translate(u, i));
    }
    for (int j = 0; j < q.set_size(arr.tgt); ++j) {
      maps[u].push_back(p.set_size(arr.src) + q.translate(u, j));
    }
  }
  return Presheaf::validate(p.logan_ptr(), std::move(obj_elems), std::move(maps));
}

PresheafEqualizer presheaf_equalizer(Presheaf const& p, Presheaf const& q,
                                     PresheafMorphism const& f,
                                     PresheafMorphism const& g) {
  if (auto v = check_presheaf_morphism(p, q, f); !v) {
    fail(*v.witness);
  }
  if (auto v = check_presheaf_morphism(p, q, g); !v) {
    fail(*v.witness);
  }
  FiniteCategory const& cat = p.logan().cat();
  std::vector<std::vector<std::string>> obj_elems(cat.object_count());
  std::vector<std::vector<int>> member(cat.object_count());  // E index -> P index
  std::vector<std::vector<int>> position(cat.object_count()); // P index -> E index
  PresheafMorphism incl;
  incl.components.resize(cat.object_count());
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    position[obj].assign(p.set_size(obj), -1);
    for (int i = 0; i < p.set_size(obj); ++i) {
      if (f.components[obj][i] == g.components[obj][i]) {
        position[obj][i] = static_cast<int>(member[obj].size());
        member[obj].push_back(i);
        obj_elems[obj].push_back(p.elem_label(obj, i));
        incl.components[obj].push_back(i);
      }
    }
  }
  std::vector<std::vector<int>> maps(cat.arrow_count());
  for (int u = 0; u < cat.arrow_count(); ++u) {
    auto const& arr = cat.arrow(u);
    for (int i : member[arr.tgt]) {
      int const pi = p.translate(u, i);
      if (position[arr.src][pi] < 0) {
        throw InternalCheckError("equalizer not closed under translation");
      }
      maps[u].push_back(position[arr.src][pi]);
    }
  }
  return PresheafEqualizer{
      Presheaf::validate(p.logan_ptr(), std::move(obj_elems), std::move(maps)),
      std::move(incl)};
}

TensorSet tensor(Presheaf const& p, SetFunctor const& a) {
  if (&p.logan() != &a.logan()) {
    fail({"DomainMismatch", {}, "presheaf and functor live over different categories"});
  }
  FiniteCategory const& cat = p.logan().cat();

  std::vector<std::vector<std::vector<int>>> index(cat.object_count());
  int total = 0;
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    index[obj].assign(p.set_size(obj), std::vector<int>(a.set_size(obj), -1));
    for (int i = 0; i < p.set_size(obj); ++i) {
      for (int j = 0; j < a.set_size(obj); ++j) {
        index[obj][i][j] = total++;
      }
    }
  }

  UnionFind uf(total);
  for (int u = 0; u < cat.arrow_count(); ++u) {
    auto const& arr = cat.arrow(u);
    for (int i = 0; i < p.set_size(arr.tgt); ++i) {
      for (int j = 0; j < a.set_size(arr.src); ++j) {
        uf.unite(index[arr.src][p.translate(u, i)][j],
                 index[arr.tgt][i][a.map(u, j)]);
      }
    }
  }

  TensorSet out;
  out.class_of.resize(cat.object_count());
  std::map<int, int> class_id;
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    out.class_of[obj].assign(p.set_size(obj), std::vector<int>(a.set_size(obj), -1));
    for (int i = 0; i < p.set_size(obj); ++i) {
      for (int j = 0; j < a.set_size(obj); ++j) {
        int const root = uf.find(index[obj][i][j]);
        auto [it, inserted] = class_id.emplace(root, out.size());
        if (inserted) {
          out.classes.emplace_back();
        }
        out.class_of[obj][i][j] = it->second;
        out.classes[it->second].emplace_back(obj, i, j);
      }
    }
  }
  for (auto& cls : out.classes) {
    std::sort(cls.begin(), cls.end());
  }
  out.labels.reserve(out.classes.size());
  for (auto const& cls : out.classes) {
    auto const [obj, i, j] = cls.front();
    out.labels.push_back("[" + cat.object_name(obj) + ":" + p.elem_label(obj, i) +
                         "*" + a.elem_label(obj, j) + "]");
  }
  return out;
}

std::vector<int> tensor_induced_map(PresheafMorphism const& f, TensorSet const& tp,
                                    TensorSet const& tq) {
  std::vector<int> out(tp.size(), -1);
  for (int c = 0; c < tp.size(); ++c) {
    for (auto const& [obj, i, j] : tp.classes[c]) {
      int const image = tq.class_of[obj][f.components[obj][i]][j];
      if (out[c] < 0) {
        out[c] = image;
      } else if (out[c] != image) {
        throw InternalCheckError("tensor_induced_map: image depends on representative");
      }
    }
  }
  return out;
}

namespace {

std::string map_label(std::vector<int> const& digits) {
  std::string out = "m";
  for (int d : digits) {
    out += std::to_string(d);
  }
  return out;
}

}  // namespace

Presheaf hom_presheaf(SetFunctor const& a, int r_size) {
  if (r_size < 0) {
    fail({"MalformedPresheaf", {}, "negative codomain size"});
  }
  FiniteCategory const& cat = a.logan().cat();

  // All maps A(C) -> R in lexicographic order; index = base-r digits.
  std::vector<std::vector<std::vector<int>>> functions(cat.object_count());
  std::vector<std::vector<std::string>> obj_elems(cat.object_count());
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    int const k = a.set_size(obj);
    std::vector<int> digits(k, 0);
    while (true) {
      functions[obj].push_back(digits);
      obj_elems[obj].push_back(map_label(digits));
      int pos = k - 1;
      while (pos >= 0 && digits[pos] == r_size - 1) {
        digits[pos--] = 0;
      }
      if (pos < 0 || r_size == 0) {
        break;
      }
      ++digits[pos];
    }
    if (r_size == 0 && k > 0) {
      // No maps from a nonempty set into the empty set.
      functions[obj].clear();
      obj_elems[obj].clear();
    }
  }

  auto index_of = [&](std::vector<int> const& digits) {
    int idx = 0;
    for (int d : digits) {
      idx = idx * r_size + d;
    }
    return idx;
  };

  std::vector<std::vector<int>> maps(cat.arrow_count());
  for (int u = 0; u < cat.arrow_count(); ++u) {
    auto const& arr = cat.arrow(u);
    maps[u].reserve(functions[arr.tgt].size());
    for (auto const& g : functions[arr.tgt]) {
      // g o A(u) on A(src).
      std::vector<int> digits(a.set_size(arr.src), 0);
      for (int j = 0; j < a.set_size(arr.src); ++j) {
        digits[j] = g[a.map(u, j)];
      }
      maps[u].push_back(functions[arr.src].empty() ? -1 : index_of(digits));
    }
  }
  return Presheaf::validate(a.logan_ptr(), std::move(obj_elems), std::move(maps));
}

Verdict co_yoneda_check(SetFunctor const& a, int e) {
  LoganPtr logan = a.logan_ptr();
  FiniteCategory const& cat = logan->cat();
  int const obj_e = logan->object_of(e);

  Presheaf ye = representable(logan, e);
  TensorSet t = tensor(ye, a);

  // Canonical map [h (x) x] -> A(h)(x), well-defined and bijective.
  std::vector<int> to_ae(t.size(), -1);
  for (int c = 0; c < t.size(); ++c) {
    for (auto const& [obj, i, j] : t.classes[c]) {
      auto const harrows = cat.hom(obj, obj_e);
      int const h = harrows[i];
      int const value = a.map(h, j);
      if (to_ae[c] < 0) {
        to_ae[c] = value;
      } else if (to_ae[c] != value) {
        return Verdict::no({"CoYonedaIllDefined", {cat.object_name(obj)}, ""});
      }
    }
  }
  if (t.size() != a.set_size(obj_e)) {
    return Verdict::no({"CoYonedaCardinality",
                        {std::to_string(t.size()), std::to_string(a.set_size(obj_e))},
                        "tensor with the representable has the wrong size"});
  }
  std::vector<bool> hit(a.set_size(obj_e), false);
  for (int v : to_ae) {
    if (v < 0 || hit[v]) {
      return Verdict::no({"CoYonedaNotBijective", {}, ""});
    }
    hit[v] = true;
  }

  // Naturality in e: arrows u: e -> e' correspond to A(u) under the
  // canonical bijections.
  for (int u = 0; u < cat.arrow_count(); ++u) {
    auto const& arr = cat.arrow(u);
    if (arr.src != obj_e) {
      continue;
    }
    int const e_prime = logan->idempotent_of(arr.tgt);
    Presheaf ye2 = representable(logan, e_prime);
    TensorSet t2 = tensor(ye2, a);
    std::vector<int> to_ae2(t2.size(), -1);
    for (int c = 0; c < t2.size(); ++c) {
      auto const& [obj, i, j] = t2.classes[c].front();
      to_ae2[c] = a.map(cat.hom(obj, arr.tgt)[i], j);
    }
    // y(u): y(e) -> y(e') by postcomposition; induced map on tensors.
    PresheafMorphism post;
    post.components.resize(cat.object_count());
    for (int obj = 0; obj < cat.object_count(); ++obj) {
      for (int h : cat.hom(obj, obj_e)) {
        int const uh = cat.compose(u, h);
        auto const target_hom = cat.hom(obj, arr.tgt);
        auto it = std::find(target_hom.begin(), target_hom.end(), uh);
        post.components[obj].push_back(static_cast<int>(it - target_hom.begin()));
      }
    }
    if (auto v = check_presheaf_morphism(ye, ye2, post); !v) {
      throw InternalCheckError("co_yoneda_check: postcomposition not natural");
    }
    auto induced = tensor_induced_map(post, t, t2);
    for (int c = 0; c < t.size(); ++c) {
      if (to_ae2[induced[c]] != a.map(u, to_ae[c])) {
        return Verdict::no({"CoYonedaNotNatural", {arr.label}, ""});
      }
    }
  }
  return Verdict::yes();
}

AdjunctionReport check_adjunction(Presheaf const& p, SetFunctor const& a,
                                  int r_size, long long enumeration_cap) {
  AdjunctionReport report;
  TensorSet t = tensor(p, a);
  Presheaf hom = hom_presheaf(a, r_size);
  FiniteCategory const& cat = p.logan().cat();

  long long lhs_count = 1;
  for (int i = 0; i < t.size(); ++i) {
    lhs_count *= r_size;
    if (lhs_count > enumeration_cap) {
      report.detail = "function side exceeds enumeration cap";
      return report;
    }
  }

  auto eta_of_phi = [&](std::vector<int> const& phi) {
    PresheafMorphism eta;
    eta.components.resize(cat.object_count());
    for (int obj = 0; obj < cat.object_count(); ++obj) {
      for (int i = 0; i < p.set_size(obj); ++i) {
        std::vector<int> digits(a.set_size(obj), 0);
        for (int j = 0; j < a.set_size(obj); ++j) {
          digits[j] = phi[t.class_of[obj][i][j]];
        }
        int idx = 0;
        for (int d : digits) {
          idx = idx * r_size + d;
        }
        eta.components[obj].push_back(idx);
      }
    }
    return eta;
  };

  auto phi_of_eta = [&](PresheafMorphism const& eta) -> std::optional<std::vector<int>> {
    std::vector<int> phi(t.size(), -1);
    for (int obj = 0; obj < cat.object_count(); ++obj) {
      for (int i = 0; i < p.set_size(obj); ++i) {
        // Decode the digits of eta(p) and read off the value at each a.
        int code = eta.components[obj][i];
        std::vector<int> digits(a.set_size(obj), 0);
        for (int j = a.set_size(obj) - 1; j >= 0; --j) {
          digits[j] = code % r_size;
          code /= r_size;
        }
        for (int j = 0; j < a.set_size(obj); ++j) {
          int const cls = t.class_of[obj][i][j];
          if (phi[cls] >= 0 && phi[cls] != digits[j]) {
            return std::nullopt;  // not constant on a tensor class
          }
          phi[cls] = digits[j];
        }
      }
    }
    return phi;
  };

  // Forward: every function phi yields a natural transformation whose
  // inverse image is phi again; distinct phis stay distinct.
  std::vector<int> phi(t.size(), 0);
  std::vector<PresheafMorphism> images;
  for (long long step = 0; step < lhs_count; ++step) {
    auto eta = eta_of_phi(phi);
    if (auto v = check_presheaf_morphism(p, hom, eta); !v) {
      report.detail = "constructed transformation not natural: " + format_witness(*v.witness);
      return report;
    }
    auto back = phi_of_eta(eta);
    if (!back || *back != phi) {
      report.detail = "round trip function -> transformation -> function failed";
      return report;
    }
    images.push_back(std::move(eta));
    ++report.functions_checked;

    int pos = t.size() - 1;
    while (pos >= 0 && phi[pos] == r_size - 1) {
      phi[pos--] = 0;
    }
    if (pos < 0) {
      break;
    }
    ++phi[pos];
  }

  // Distinctness of the images.
  std::sort(images.begin(), images.end(),
            [](PresheafMorphism const& x, PresheafMorphism const& y) {
              return x.components < y.components;
            });
  for (size_t i = 1; i < images.size(); ++i) {
    if (images[i].components == images[i - 1].components) {
      report.detail = "two functions map to one transformation";
      return report;
    }
  }

  // Backward: when small enough, enumerate all natural transformations
  // P -> Hom(A,R) and check each is hit.
  long long rhs_count = 1;
  bool enumerable = true;
  for (int obj = 0; obj < cat.object_count() && enumerable; ++obj) {
    for (int i = 0; i < p.set_size(obj) && enumerable; ++i) {
      if (hom.set_size(obj) == 0) {
        enumerable = p.set_size(obj) == 0;
        break;
      }
      rhs_count *= hom.set_size(obj);
      enumerable = rhs_count <= enumeration_cap;
    }
  }
  if (enumerable) {
    auto all = enumerate_presheaf_morphisms(p, hom, enumeration_cap);
    report.transformations_checked = static_cast<int>(all.size());
    report.exhaustive = true;
    if (all.size() != images.size()) {
      report.detail = "transformation count differs from function count";
      return report;
    }
    for (auto const& eta : all) {
      auto back = phi_of_eta(eta);
      if (!back) {
        report.detail = "natural transformation not constant on tensor classes";
        return report;
      }
    }
  }

  report.ok = true;
  return report;
}

bool FlatnessReport::all_preserved() const {
  return std::all_of(items.begin(), items.end(),
                     [](SpotCheckItem const& i) { return i.holds; });
}

std::vector<std::string> FlatnessReport::failures() const {
  std::vector<std::string> out;
  for (auto const& item : items) {
    if (!item.holds) {
      out.push_back(item.name);
    }
  }
  return out;
}

std::vector<std::pair<std::string, Presheaf>> default_presheaf_suite(LoganPtr logan) {
  std::vector<std::pair<std::string, Presheaf>> out;
  out.emplace_back("terminal", terminal_presheaf(logan));
  auto const& s = logan->sgp();
  for (int e : s.idempotents()) {
    out.emplace_back("y(" + s.name(e) + ")", representable(logan, e));
  }
  if (out.size() >= 3) {
    out.emplace_back("y+y", presheaf_sum(out[1].second, out[2].second));
  } else {
    out.emplace_back("y+y", presheaf_sum(out[1].second, out[1].second));
  }
  return out;
}

FlatnessReport flatness_spotcheck(SetFunctor const& a) {
  FlatnessReport report;
  report.filtered = is_filtered(a).value;
  auto suite = default_presheaf_suite(a.logan_ptr());

  {
    TensorSet t = tensor(terminal_presheaf(a.logan_ptr()), a);
    report.items.push_back({"terminal", t.size() == 1,
                            "tensor(1, A) has " + std::to_string(t.size()) +
                                " classes"});
  }

  for (size_t i = 0; i < suite.size(); ++i) {
    for (size_t j = i; j < suite.size(); ++j) {
      auto const& [pname, p] = suite[i];
      auto const& [qname, q] = suite[j];
      auto prod = presheaf_product(p, q);
      TensorSet tp = tensor(p, a);
      TensorSet tq = tensor(q, a);
      TensorSet tpq = tensor(prod.product, a);
      auto lm = tensor_induced_map(prod.proj_left, tpq, tp);
      auto rm = tensor_induced_map(prod.proj_right, tpq, tq);
      // The comparison map into the set product must be a bijection.
      std::vector<std::vector<bool>> hit(tp.size(), std::vector<bool>(tq.size(), false));
      bool ok = tpq.size() == tp.size() * tq.size();
      for (int c = 0; c < tpq.size(); ++c) {
        if (hit[lm[c]][rm[c]]) {
          ok = false;
        }
        hit[lm[c]][rm[c]] = true;
      }
      report.items.push_back({"product " + pname + " x " + qname, ok,
                              std::to_string(tpq.size()) + " vs " +
                                  std::to_string(tp.size() * tq.size())});
    }
  }

  // Equalizers of a few parallel pairs between suite presheaves.
  for (size_t i = 0; i < suite.size(); ++i) {
    for (size_t j = 0; j < suite.size(); ++j) {
      auto const& [pname, p] = suite[i];
      auto const& [qname, q] = suite[j];
      std::vector<PresheafMorphism> morphisms;
      try {
        morphisms = enumerate_presheaf_morphisms(p, q, 20'000);
      } catch (ValidationError const&) {
        continue;
      }
      if (morphisms.size() > 6) {
        morphisms.resize(6);
      }
      TensorSet tp = tensor(p, a);
      TensorSet tq = tensor(q, a);
      for (size_t x = 0; x < morphisms.size(); ++x) {
        for (size_t y = x; y < morphisms.size(); ++y) {
          auto eq = presheaf_equalizer(p, q, morphisms[x], morphisms[y]);
          TensorSet te = tensor(eq.equalizer, a);
          auto incl = tensor_induced_map(eq.inclusion, te, tp);
          auto fm = tensor_induced_map(morphisms[x], tp, tq);
          auto gm = tensor_induced_map(morphisms[y], tp, tq);
          // Image must be exactly the equalizer of the induced maps,
          // injectively.
          std::vector<bool> hit(tp.size(), false);
          bool ok = true;
          for (int c = 0; c < te.size(); ++c) {
            if (hit[incl[c]] || fm[incl[c]] != gm[incl[c]]) {
              ok = false;
            }
            hit[incl[c]] = true;
          }
          int eq_size = 0;
          for (int c = 0; c < tp.size(); ++c) {
            eq_size += fm[c] == gm[c] ? 1 : 0;
          }
          ok = ok && eq_size == te.size();
          report.items.push_back(
              {"equalizer " + pname + " => " + qname + " #" + std::to_string(x) +
                   "," + std::to_string(y),
               ok, std::to_string(te.size()) + " vs " + std::to_string(eq_size)});
        }
      }
    }
  }

  return report;
}

}  // namespace invtopos
