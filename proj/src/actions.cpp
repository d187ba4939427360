#include "invtopos/actions.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace invtopos {

PartialAction PartialAction::validate(SemigroupPtr sgp,
                                      std::vector<std::string> carrier,
                                      std::vector<std::vector<int>> act,
                                      bool allow_non_effective) {
  InverseSemigroup const& s = *sgp;
  int const n = s.size();
  int const m = static_cast<int>(carrier.size());
  if (static_cast<int>(act.size()) != n) {
    fail({"MalformedAction", {}, "one partial map per semigroup element required"});
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(act[i].size()) != m) {
      fail({"MalformedAction", {s.name(i)}, "map length does not match carrier"});
    }
    for (int x = 0; x < m; ++x) {
      if (act[i][x] < -1 || act[i][x] >= m) {
        fail({"MalformedAction", {s.name(i), carrier[x]}, "image out of range"});
      }
    }
  }
  {
    auto sorted = carrier;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail({"MalformedAction", {}, "duplicate carrier point name"});
    }
  }

  for (int i = 0; i < n; ++i) {
    std::vector<int> seen(m, -1);
    for (int x = 0; x < m; ++x) {
      int const y = act[i][x];
      if (y < 0) {
        continue;
      }
      if (seen[y] >= 0) {
        fail({"NotInjective", {s.name(i), carrier[seen[y]], carrier[x]}, ""});
      }
      seen[y] = x;
    }
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int const ab = s.mul(a, b);
      for (int x = 0; x < m; ++x) {
        int const direct = act[ab][x];
        if (direct < 0) {
          continue;
        }
        int const bx = act[b][x];
        if (bx < 0 || act[a][bx] != direct) {
          fail({"PrehomLawViolation", {s.name(a), s.name(b), carrier[x]}, ""});
        }
      }
    }
  }

  if (!allow_non_effective) {
    for (int x = 0; x < m; ++x) {
      bool covered = false;
      for (int i = 0; i < n && !covered; ++i) {
        covered = act[i][x] >= 0;
      }
      if (!covered) {
        fail({"NotEffective", {carrier[x]}, "point is in no domain"});
      }
    }
  }

  PartialAction out;
  out.sgp_ = std::move(sgp);
  out.carrier_ = std::move(carrier);
  out.act_ = std::move(act);
  return out;
}

std::optional<int> PartialAction::point_index(std::string_view name) const {
  for (int x = 0; x < carrier_size(); ++x) {
    if (carrier_[x] == name) {
      return x;
    }
  }
  return std::nullopt;
}

std::vector<int> PartialAction::domain_of(int s) const {
  std::vector<int> out;
  for (int x = 0; x < carrier_size(); ++x) {
    if (act_[s][x] >= 0) {
      out.push_back(x);
    }
  }
  return out;
}

namespace {

// act(s) as a PartialMap on the carrier.
PartialMap action_map(PartialAction const& a, int s) {
  PartialMap m(a.carrier_size(), -1);
  for (int x = 0; x < a.carrier_size(); ++x) {
    m[x] = a.apply(s, x);
  }
  return m;
}

}  // namespace

Verdict is_strict(PartialAction const& a) {
  InverseSemigroup const& s = a.sgp();
  for (int e : s.idempotents()) {
    for (int f : s.idempotents()) {
      PartialMap const lhs = action_map(a, s.mul(e, f));
      PartialMap const rhs = compose_partial(action_map(a, e), action_map(a, f));
      if (lhs != rhs) {
        return Verdict::no({"NotStrict", {s.name(e), s.name(f)},
                            "act(ef) and act(e)act(f) differ"});
      }
    }
  }
  return Verdict::yes();
}

Verdict is_connected(PartialAction const& a) {
  InverseSemigroup const& s = a.sgp();
  for (int x = 0; x < a.carrier_size(); ++x) {
    std::vector<int> defined_idems;
    for (int e : s.idempotents()) {
      if (a.defined(e, x)) {
        defined_idems.push_back(e);
      }
    }
    if (defined_idems.size() <= 1) {
      continue;
    }
    int const k = static_cast<int>(defined_idems.size());
    UnionFind uf(k);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (s.natural_leq(defined_idems[i], defined_idems[j]) ||
            s.natural_leq(defined_idems[j], defined_idems[i])) {
          uf.unite(i, j);
        }
      }
    }
    for (int i = 1; i < k; ++i) {
      if (!uf.same(0, i)) {
        std::vector<std::string> comp0, compi;
        for (int j = 0; j < k; ++j) {
          (uf.same(0, j) ? comp0 : compi).push_back(s.name(defined_idems[j]));
        }
        return Verdict::no({"NotConnected",
                            {a.point_name(x)},
                            "components {" + join_names(comp0) + "} and {" +
                                join_names(compi) + "} cannot be joined"});
      }
    }
  }
  return Verdict::yes();
}

Verdict is_transitive(PartialAction const& a) {
  for (int x = 0; x < a.carrier_size(); ++x) {
    for (int y = 0; y < a.carrier_size(); ++y) {
      bool reached = false;
      for (int s = 0; s < a.sgp().size() && !reached; ++s) {
        reached = a.apply(s, x) == y;
      }
      if (!reached) {
        return Verdict::no({"NotTransitive", {a.point_name(x), a.point_name(y)}, ""});
      }
    }
  }
  return Verdict::yes();
}

Verdict is_free(PartialAction const& a) {
  InverseSemigroup const& sg = a.sgp();
  for (int s = 0; s < sg.size(); ++s) {
    for (int t = 0; t < sg.size(); ++t) {
      for (int x = 0; x < a.carrier_size(); ++x) {
        int const sx = a.apply(s, x);
        if (sx < 0 || sx != a.apply(t, x)) {
          continue;
        }
        bool found = false;
        for (int c = 0; c < sg.size() && !found; ++c) {
          found = sg.natural_leq(c, s) && sg.natural_leq(c, t) &&
                  a.apply(c, x) == sx;
        }
        if (!found) {
          return Verdict::no({"NotFree", {sg.name(s), sg.name(t), a.point_name(x)}, ""});
        }
      }
    }
  }
  return Verdict::yes();
}

bool is_torsor(PartialAction const& a) {
  if (auto strict = is_strict(a); !strict) {
    fail(*strict.witness);
  }
  return is_transitive(a).value && is_free(a).value;
}

Verdict check_morphism(PartialAction const& a, PartialAction const& b,
                       std::vector<int> const& map) {
  if (static_cast<int>(map.size()) != a.carrier_size()) {
    fail({"MalformedMorphism", {}, "map length does not match source carrier"});
  }
  for (int x : map) {
    if (x < 0 || x >= b.carrier_size()) {
      fail({"MalformedMorphism", {}, "image out of range"});
    }
  }
  for (int s = 0; s < a.sgp().size(); ++s) {
    for (int x = 0; x < a.carrier_size(); ++x) {
      int const sx = a.apply(s, x);
      if (sx < 0) {
        continue;
      }
      if (b.apply(s, map[x]) != map[sx]) {
        return Verdict::no({"NotEquivariant", {a.sgp().name(s), a.point_name(x)}, ""});
      }
    }
  }
  return Verdict::yes();
}

std::vector<std::vector<int>> enumerate_morphisms(PartialAction const& a,
                                                  PartialAction const& b,
                                                  long long cap) {
  long long total = 1;
  for (int i = 0; i < a.carrier_size(); ++i) {
    total *= b.carrier_size();
    if (total > cap) {
      fail({"TooLarge", {}, "morphism enumeration exceeds cap"});
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> map(a.carrier_size(), 0);
  if (a.carrier_size() == 0) {
    out.push_back(map);
    return out;
  }
  if (b.carrier_size() == 0) {
    return out;
  }
  while (true) {
    if (check_morphism(a, b, map).value) {
      out.push_back(map);
    }
    int pos = a.carrier_size() - 1;
    while (pos >= 0 && map[pos] == b.carrier_size() - 1) {
      map[pos--] = 0;
    }
    if (pos < 0) {
      break;
    }
    ++map[pos];
  }
  return out;
}

PartialMap compose_partial(PartialMap const& outer, PartialMap const& inner) {
  PartialMap out(inner.size(), -1);
  for (size_t x = 0; x < inner.size(); ++x) {
    int const y = inner[x];
    if (y >= 0 && outer[y] >= 0) {
      out[x] = outer[y];
    }
  }
  return out;
}

PartialMap invert_partial(PartialMap const& m) {
  PartialMap out(m.size(), -1);
  for (size_t x = 0; x < m.size(); ++x) {
    if (m[x] >= 0) {
      out[m[x]] = static_cast<int>(x);
    }
  }
  return out;
}

bool is_partial_injection(PartialMap const& m) {
  std::vector<bool> seen(m.size(), false);
  for (int y : m) {
    if (y < 0) {
      continue;
    }
    if (y >= static_cast<int>(m.size()) || seen[y]) {
      return false;
    }
    seen[y] = true;
  }
  return true;
}

std::string partial_map_name(PartialMap const& m) {
  std::string out;
  for (size_t x = 0; x < m.size(); ++x) {
    if (m[x] < 0) {
      continue;
    }
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(x + 1) + ">" + std::to_string(m[x] + 1);
  }
  return out.empty() ? "0" : out;
}

PartialAction PartialBijectionSemigroup::natural_action() const {
  std::vector<std::string> carrier;
  for (int x = 0; x < degree; ++x) {
    carrier.push_back(std::to_string(x + 1));
  }
  std::vector<std::vector<int>> act;
  act.reserve(graphs.size());
  for (auto const& g : graphs) {
    act.push_back(g);
  }
  return PartialAction::validate(sgp, std::move(carrier), std::move(act),
                                 /*allow_non_effective=*/true);
}

PartialBijectionSemigroup close_partial_bijections(
    int degree, std::vector<PartialMap> const& generators, int max_size) {
  std::map<PartialMap, int> index;
  std::vector<PartialMap> elems;
  std::queue<int> pending;

  auto add = [&](PartialMap const& m) {
    auto it = index.find(m);
    if (it != index.end()) {
      return it->second;
    }
    if (static_cast<int>(elems.size()) >= max_size) {
      fail({"TooLarge", {}, "closure exceeds cap"});
    }
    int const id = static_cast<int>(elems.size());
    index.emplace(m, id);
    elems.push_back(m);
    pending.push(id);
    return id;
  };

  for (auto const& g : generators) {
    if (static_cast<int>(g.size()) != degree || !is_partial_injection(g)) {
      fail({"MalformedGenerator", {partial_map_name(g)}, ""});
    }
    add(g);
    add(invert_partial(g));
  }
  if (elems.empty()) {
    fail({"MalformedGenerator", {}, "no generators"});
  }

  while (!pending.empty()) {
    int const i = pending.front();
    pending.pop();
    size_t const snapshot = elems.size();
    for (size_t j = 0; j < snapshot; ++j) {
      add(compose_partial(elems[i], elems[j]));
      add(compose_partial(elems[j], elems[i]));
    }
  }

  // Elements in a fixed canonical order: by (domain size, graph).
  std::vector<int> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return elems[a] < elems[b];
  });

  std::vector<PartialMap> graphs;
  std::map<PartialMap, int> pos;
  std::vector<std::string> names;
  for (int id : order) {
    pos.emplace(elems[id], static_cast<int>(graphs.size()));
    graphs.push_back(elems[id]);
    names.push_back(partial_map_name(elems[id]));
  }

  int const n = static_cast<int>(graphs.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    inv[i] = pos.at(invert_partial(graphs[i]));
    for (int j = 0; j < n; ++j) {
      table[i][j] = pos.at(compose_partial(graphs[i], graphs[j]));
    }
  }

  PartialBijectionSemigroup out;
  out.sgp = std::make_shared<const InverseSemigroup>(
      InverseSemigroup::validate(std::move(names), std::move(table), std::move(inv)));
  out.degree = degree;
  out.graphs = std::move(graphs);
  return out;
}

PartialBijectionSemigroup symmetric_inverse(int degree) {
  // Every partial bijection arises from the full symmetric group plus one
  // rank-lowering restriction; the n = 1 and n = 0 cases are degenerate.
  std::vector<PartialMap> gens;
  if (degree <= 0) {
    fail({"MalformedGenerator", {}, "degree must be positive"});
  }
  PartialMap id(degree);
  std::iota(id.begin(), id.end(), 0);
  gens.push_back(id);
  if (degree >= 2) {
    PartialMap cycle(degree), swap01 = id, drop = id;
    for (int i = 0; i < degree; ++i) {
      cycle[i] = (i + 1) % degree;
    }
    std::swap(swap01[0], swap01[1]);
    drop[0] = -1;
    gens.push_back(cycle);
    gens.push_back(swap01);
    gens.push_back(drop);
  } else {
    PartialMap empty(degree, -1);
    gens.push_back(empty);
  }
  return close_partial_bijections(degree, gens);
}

}  // namespace invtopos
