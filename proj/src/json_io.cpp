#include "invtopos/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace invtopos::io {

namespace fs = std::filesystem;

json load_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    fail({"FileNotFound", {path}, ""});
  }
  json j;
  try {
    in >> j;
  } catch (json::parse_error const& err) {
    fail({"ParseError", {path}, err.what()});
  }
  return j;
}

void write_file(std::string const& path, json const& j) {
  std::ofstream out(path);
  if (!out) {
    fail({"FileNotWritable", {path}, ""});
  }
  out << j.dump(2) << "\n";
}

namespace {

[[noreturn]] void bad_format(std::string const& what) {
  fail({"BadFormat", {}, what});
}

json const& need(json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad_format(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

int element_index(InverseSemigroup const& s, std::string const& name) {
  auto idx = s.index(name);
  if (!idx) {
    fail({"UnknownElement", {name}, ""});
  }
  return *idx;
}

// A semigroup reference: inline object or path string.
SemigroupPtr resolve_semigroup(json const& j, std::string const& base_dir) {
  if (j.is_string()) {
    fs::path p = j.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) {
      p = fs::path(base_dir) / p;
    }
    return load_semigroup(p.string());
  }
  return semigroup_from_json(j);
}

}  // namespace

json semigroup_to_json(InverseSemigroup const& s) {
  json table = json::array();
  for (int a = 0; a < s.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < s.size(); ++b) {
      row.push_back(s.name(s.mul(a, b)));
    }
    table.push_back(std::move(row));
  }
  json inv = json::object();
  for (int a = 0; a < s.size(); ++a) {
    inv[s.name(a)] = s.name(s.inv(a));
  }
  return json{{"elements", s.names()}, {"table", std::move(table)}, {"inv", std::move(inv)}};
}

SemigroupPtr semigroup_from_json(json const& j) {
  auto names = need(j, "elements").get<std::vector<std::string>>();
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < names.size(); ++i) {
    index.emplace(names[i], static_cast<int>(i));
  }
  auto lookup = [&](json const& v) {
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) {
      fail({"UnknownElement", {v.get<std::string>()}, ""});
    }
    return it->second;
  };

  auto const& table_j = need(j, "table");
  if (!table_j.is_array() || table_j.size() != names.size()) {
    bad_format("table must be a square array over the element list");
  }
  std::vector<std::vector<int>> table;
  for (auto const& row_j : table_j) {
    if (!row_j.is_array() || row_j.size() != names.size()) {
      bad_format("table must be a square array over the element list");
    }
    std::vector<int> row;
    for (auto const& v : row_j) {
      row.push_back(lookup(v));
    }
    table.push_back(std::move(row));
  }

  std::vector<int> inv(names.size(), -1);
  if (j.contains("inv")) {
    auto const& inv_j = j.at("inv");
    for (size_t i = 0; i < names.size(); ++i) {
      if (!inv_j.contains(names[i])) {
        bad_format("inv must assign every element");
      }
      inv[i] = lookup(inv_j.at(names[i]));
    }
  } else {
    inv = InverseSemigroup::infer_inverses(names, table);
  }

  bool const skip = j.value("skip_associativity", false);
  return std::make_shared<const InverseSemigroup>(
      InverseSemigroup::validate(std::move(names), std::move(table), std::move(inv), skip));
}

SemigroupPtr load_semigroup(std::string const& path) {
  return semigroup_from_json(load_file(path));
}

json subset_to_json(InverseSemigroup const& s, ElementSet const& members) {
  json names = json::array();
  for (int x : members) {
    names.push_back(s.name(x));
  }
  return json{{"members", std::move(names)}};
}

ElementSet subset_from_json(InverseSemigroup const& s, json const& j) {
  auto const& arr = j.is_array() ? j : need(j, "members");
  std::vector<int> members;
  for (auto const& v : arr) {
    members.push_back(element_index(s, v.get<std::string>()));
  }
  return sorted_set(std::move(members));
}

json action_to_json(PartialAction const& a, std::string const& semigroup_ref) {
  json maps = json::object();
  for (int s = 0; s < a.sgp().size(); ++s) {
    json assignment = json::object();
    for (int x = 0; x < a.carrier_size(); ++x) {
      if (a.defined(s, x)) {
        assignment[a.point_name(x)] = a.point_name(a.apply(s, x));
      }
    }
    if (!assignment.empty()) {
      maps[a.sgp().name(s)] = std::move(assignment);
    }
  }
  json out{{"carrier", a.carrier()}, {"maps", std::move(maps)}};
  out["semigroup"] = semigroup_ref.empty() ? semigroup_to_json(a.sgp())
                                           : json(semigroup_ref);
  return out;
}

PartialAction action_from_json(json const& j, std::string const& base_dir) {
  SemigroupPtr sgp = resolve_semigroup(need(j, "semigroup"), base_dir);
  auto carrier = need(j, "carrier").get<std::vector<std::string>>();
  auto point = [&](std::string const& name) {
    for (size_t x = 0; x < carrier.size(); ++x) {
      if (carrier[x] == name) {
        return static_cast<int>(x);
      }
    }
    fail({"UnknownPoint", {name}, ""});
  };

  std::vector<std::vector<int>> act(sgp->size(), std::vector<int>(carrier.size(), -1));
  for (auto const& [elt_name, assignment] : need(j, "maps").items()) {
    int const elt = element_index(*sgp, elt_name);
    for (auto const& [x, y] : assignment.items()) {
      act[elt][point(x)] = point(y.get<std::string>());
    }
  }
  bool const allow = j.value("allow_non_effective", false);
  return PartialAction::validate(std::move(sgp), std::move(carrier), std::move(act), allow);
}

PartialAction load_action(std::string const& path) {
  return action_from_json(load_file(path), fs::path(path).parent_path().string());
}

namespace {

// Shared shape of functor and presheaf files: on_objects keyed by object
// name, on_arrows keyed by the arrow label "(f,s)". For functors the maps
// go source set -> target set, for presheaves target set -> source set.
template <typename Validate>
auto functor_like_from_json(json const& j, std::string const& base_dir,
                            bool contravariant, Validate&& validate) {
  SemigroupPtr sgp = resolve_semigroup(need(j, "semigroup"), base_dir);
  LoganPtr logan = build_logan(sgp);
  FiniteCategory const& cat = logan->cat();

  std::vector<std::vector<std::string>> obj_elems(cat.object_count());
  for (auto const& [obj_name, labels] : need(j, "on_objects").items()) {
    int const e = element_index(*sgp, obj_name);
    obj_elems[logan->object_of(e)] = labels.template get<std::vector<std::string>>();
  }
  auto elem_of = [&](int obj, std::string const& label) {
    for (size_t i = 0; i < obj_elems[obj].size(); ++i) {
      if (obj_elems[obj][i] == label) {
        return static_cast<int>(i);
      }
    }
    fail({"UnknownElement", {label}, "no such element in the object's set"});
  };

  std::vector<std::vector<int>> arrow_maps(cat.arrow_count());
  std::vector<bool> given(cat.arrow_count(), false);
  if (j.contains("on_arrows")) {
    for (auto const& [arrow_label, mapping] : j.at("on_arrows").items()) {
      int arrow = -1;
      for (int a = 0; a < cat.arrow_count(); ++a) {
        if (cat.arrow(a).label == arrow_label) {
          arrow = a;
          break;
        }
      }
      if (arrow < 0) {
        fail({"UnknownArrow", {arrow_label}, ""});
      }
      int const from = contravariant ? cat.arrow(arrow).tgt : cat.arrow(arrow).src;
      int const to = contravariant ? cat.arrow(arrow).src : cat.arrow(arrow).tgt;
      arrow_maps[arrow].assign(obj_elems[from].size(), -1);
      for (auto const& [x, y] : mapping.items()) {
        arrow_maps[arrow][elem_of(from, x)] = elem_of(to, y.template get<std::string>());
      }
      for (int v : arrow_maps[arrow]) {
        if (v < 0) {
          fail({"BadFormat", {arrow_label}, "arrow map is not total"});
        }
      }
      given[arrow] = true;
    }
  }
  // Identity arrows may be omitted.
  for (int a = 0; a < cat.arrow_count(); ++a) {
    if (!given[a]) {
      if (a != cat.identity(cat.arrow(a).src)) {
        fail({"BadFormat", {cat.arrow(a).label}, "missing arrow assignment"});
      }
      arrow_maps[a].resize(obj_elems[cat.arrow(a).src].size());
      std::iota(arrow_maps[a].begin(), arrow_maps[a].end(), 0);
    }
  }
  return validate(std::move(logan), std::move(obj_elems), std::move(arrow_maps));
}

template <typename FunctorLike>
json functor_like_to_json(FunctorLike const& f, std::string const& semigroup_ref,
                          bool contravariant) {
  LoganCategory const& logan = f.logan();
  FiniteCategory const& cat = logan.cat();
  json on_objects = json::object();
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    on_objects[cat.object_name(obj)] = f.object_sets()[obj];
  }
  json on_arrows = json::object();
  for (int a = 0; a < cat.arrow_count(); ++a) {
    int const from = contravariant ? cat.arrow(a).tgt : cat.arrow(a).src;
    int const to = contravariant ? cat.arrow(a).src : cat.arrow(a).tgt;
    json mapping = json::object();
    for (size_t i = 0; i < f.object_sets()[from].size(); ++i) {
      int const image = f.arrow_maps()[a][i];
      mapping[f.object_sets()[from][i]] = f.object_sets()[to][image];
    }
    on_arrows[cat.arrow(a).label] = std::move(mapping);
  }
  json out{{"on_objects", std::move(on_objects)}, {"on_arrows", std::move(on_arrows)}};
  out["semigroup"] = semigroup_ref.empty() ? semigroup_to_json(logan.sgp())
                                           : json(semigroup_ref);
  return out;
}

}  // namespace

json functor_to_json(SetFunctor const& f, std::string const& semigroup_ref) {
  return functor_like_to_json(f, semigroup_ref, /*contravariant=*/false);
}

SetFunctor functor_from_json(json const& j, std::string const& base_dir) {
  return functor_like_from_json(j, base_dir, /*contravariant=*/false,
                                [](LoganPtr l, auto obj, auto maps) {
                                  return SetFunctor::validate(std::move(l), std::move(obj),
                                                              std::move(maps));
                                });
}

SetFunctor load_functor(std::string const& path) {
  return functor_from_json(load_file(path), fs::path(path).parent_path().string());
}

json presheaf_to_json(Presheaf const& p, std::string const& semigroup_ref) {
  return functor_like_to_json(p, semigroup_ref, /*contravariant=*/true);
}

Presheaf presheaf_from_json(json const& j, std::string const& base_dir) {
  return functor_like_from_json(j, base_dir, /*contravariant=*/true,
                                [](LoganPtr l, auto obj, auto maps) {
                                  return Presheaf::validate(std::move(l), std::move(obj),
                                                            std::move(maps));
                                });
}

Presheaf load_presheaf(std::string const& path) {
  return presheaf_from_json(load_file(path), fs::path(path).parent_path().string());
}

json space_to_json(FiniteSpace const& sp) {
  json leq = json::array();
  for (int x = 0; x < sp.size(); ++x) {
    for (int y = 0; y < sp.size(); ++y) {
      if (x != y && sp.leq(x, y)) {
        leq.push_back(json::array({sp.point_name(x), sp.point_name(y)}));
      }
    }
  }
  return json{{"points", sp.points()}, {"leq", std::move(leq)}};
}

SpacePtr space_from_json(json const& j) {
  auto points = need(j, "points").get<std::vector<std::string>>();
  auto point = [&](std::string const& name) {
    for (size_t x = 0; x < points.size(); ++x) {
      if (points[x] == name) {
        return static_cast<int>(x);
      }
    }
    fail({"UnknownPoint", {name}, ""});
  };
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("leq")) {
    for (auto const& pair : j.at("leq")) {
      pairs.emplace_back(point(pair.at(0).get<std::string>()),
                         point(pair.at(1).get<std::string>()));
    }
  }
  return std::make_shared<const FiniteSpace>(
      FiniteSpace::validate(std::move(points), std::move(pairs)));
}

json sheaf_to_json(FiniteSheaf const& sh) {
  FiniteSpace const& sp = sh.space();
  json stalks = json::object();
  for (int x = 0; x < sp.size(); ++x) {
    stalks[sp.point_name(x)] = sh.stalks()[x];
  }
  json restrictions = json::array();
  for (int x = 0; x < sp.size(); ++x) {
    for (int y = 0; y < sp.size(); ++y) {
      if (x == y || !sp.leq(x, y)) {
        continue;
      }
      json map = json::object();
      for (int i = 0; i < sh.stalk_size(x); ++i) {
        map[sh.elem_label(x, i)] = sh.elem_label(y, sh.res(x, y, i));
      }
      restrictions.push_back(json{{"from", sp.point_name(x)},
                                  {"to", sp.point_name(y)},
                                  {"map", std::move(map)}});
    }
  }
  return json{{"stalks", std::move(stalks)}, {"restrictions", std::move(restrictions)}};
}

FiniteSheaf sheaf_from_json(json const& j, SpacePtr sp) {
  FiniteSpace const& space = *sp;
  std::vector<std::vector<std::string>> stalks(space.size());
  for (auto const& [point_name, labels] : need(j, "stalks").items()) {
    auto x = space.point_index(point_name);
    if (!x) {
      fail({"UnknownPoint", {point_name}, ""});
    }
    stalks[*x] = labels.get<std::vector<std::string>>();
  }
  auto elem_of = [&](int x, std::string const& label) {
    for (size_t i = 0; i < stalks[x].size(); ++i) {
      if (stalks[x][i] == label) {
        return static_cast<int>(i);
      }
    }
    fail({"UnknownElement", {label}, "no such stalk element"});
  };

  std::vector<std::vector<std::vector<int>>> res(
      space.size(), std::vector<std::vector<int>>(space.size()));
  for (int x = 0; x < space.size(); ++x) {
    res[x][x].resize(stalks[x].size());
    std::iota(res[x][x].begin(), res[x][x].end(), 0);
  }
  if (j.contains("restrictions")) {
    for (auto const& entry : j.at("restrictions")) {
      auto x = space.point_index(need(entry, "from").get<std::string>());
      auto y = space.point_index(need(entry, "to").get<std::string>());
      if (!x || !y) {
        fail({"UnknownPoint", {}, "restriction endpoint"});
      }
      res[*x][*y].assign(stalks[*x].size(), -1);
      for (auto const& [from_label, to_label] : need(entry, "map").items()) {
        res[*x][*y][elem_of(*x, from_label)] = elem_of(*y, to_label.get<std::string>());
      }
      for (int v : res[*x][*y]) {
        if (v < 0) {
          fail({"BadFormat", {}, "restriction map is not total"});
        }
      }
    }
  }
  return FiniteSheaf::validate(std::move(sp), std::move(stalks), std::move(res));
}

json bundle_to_json(Bundle const& b, std::string const& semigroup_ref) {
  FiniteCategory const& cat = b.logan().cat();
  json sheaves = json::object();
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    sheaves[cat.object_name(obj)] = sheaf_to_json(b.sheaf(obj));
  }
  json arrows = json::object();
  for (int a = 0; a < cat.arrow_count(); ++a) {
    auto const& arr = cat.arrow(a);
    json per_point = json::object();
    for (int x = 0; x < b.space().size(); ++x) {
      json map = json::object();
      for (int i = 0; i < b.sheaf(arr.src).stalk_size(x); ++i) {
        map[b.sheaf(arr.src).elem_label(x, i)] =
            b.sheaf(arr.tgt).elem_label(x, b.arrow_map(a, x, i));
      }
      per_point[b.space().point_name(x)] = std::move(map);
    }
    arrows[arr.label] = std::move(per_point);
  }
  json out{{"kind", "bundle"},
           {"space", space_to_json(b.space())},
           {"sheaves", std::move(sheaves)},
           {"arrows", std::move(arrows)}};
  out["semigroup"] = semigroup_ref.empty() ? semigroup_to_json(b.logan().sgp())
                                           : json(semigroup_ref);
  return out;
}

Bundle bundle_from_json(json const& j, std::string const& base_dir) {
  SemigroupPtr sgp = resolve_semigroup(need(j, "semigroup"), base_dir);
  LoganPtr logan = build_logan(sgp);
  FiniteCategory const& cat = logan->cat();
  SpacePtr space = space_from_json(need(j, "space"));

  std::vector<FiniteSheaf> sheaves;
  for (int obj = 0; obj < cat.object_count(); ++obj) {
    auto const& name = cat.object_name(obj);
    sheaves.push_back(sheaf_from_json(need(need(j, "sheaves"), name.c_str()), space));
  }

  std::vector<std::vector<std::vector<int>>> arrow_maps(cat.arrow_count());
  auto const& arrows_j = need(j, "arrows");
  for (int a = 0; a < cat.arrow_count(); ++a) {
    auto const& arr = cat.arrow(a);
    arrow_maps[a].resize(space->size());
    json const* per_point = nullptr;
    if (arrows_j.contains(arr.label)) {
      per_point = &arrows_j.at(arr.label);
    } else if (a != cat.identity(arr.src)) {
      fail({"BadFormat", {arr.label}, "missing arrow assignment"});
    }
    for (int x = 0; x < space->size(); ++x) {
      if (per_point == nullptr) {
        arrow_maps[a][x].resize(sheaves[arr.src].stalk_size(x));
        std::iota(arrow_maps[a][x].begin(), arrow_maps[a][x].end(), 0);
        continue;
      }
      auto const& map = need(*per_point, space->point_name(x).c_str());
      arrow_maps[a][x].assign(sheaves[arr.src].stalk_size(x), -1);
      for (auto const& [from_label, to_label] : map.items()) {
        auto i = sheaves[arr.src].elem_index(x, from_label);
        auto v = sheaves[arr.tgt].elem_index(x, to_label.get<std::string>());
        if (!i || !v) {
          fail({"UnknownElement", {from_label}, "arrow map endpoint"});
        }
        arrow_maps[a][x][*i] = *v;
      }
      for (int v : arrow_maps[a][x]) {
        if (v < 0) {
          fail({"BadFormat", {arr.label}, "arrow map is not total"});
        }
      }
    }
  }
  return Bundle::validate(std::move(logan), std::move(space), std::move(sheaves),
                          std::move(arrow_maps));
}

Bundle load_bundle(std::string const& path) {
  return bundle_from_json(load_file(path), fs::path(path).parent_path().string());
}

json sheaf_action_to_json(SheafAction const& sa, std::string const& semigroup_ref) {
  json maps = json::object();
  for (int s = 0; s < sa.sgp->size(); ++s) {
    json assignment = json::object();
    for (int t = 0; t < sa.action.carrier_size(); ++t) {
      if (sa.action.defined(s, t)) {
        assignment[sa.action.point_name(t)] =
            sa.action.point_name(sa.action.apply(s, t));
      }
    }
    if (!assignment.empty()) {
      maps[sa.sgp->name(s)] = std::move(assignment);
    }
  }
  json out{{"kind", "sheaf_action"},
           {"space", space_to_json(*sa.space)},
           {"sheaf", sheaf_to_json(sa.sheaf)},
           {"maps", std::move(maps)}};
  out["semigroup"] = semigroup_ref.empty() ? semigroup_to_json(*sa.sgp)
                                           : json(semigroup_ref);
  return out;
}

SheafAction sheaf_action_from_json(json const& j, std::string const& base_dir) {
  SemigroupPtr sgp = resolve_semigroup(need(j, "semigroup"), base_dir);
  SpacePtr space = space_from_json(need(j, "space"));
  FiniteSheaf sheaf = sheaf_from_json(need(j, "sheaf"), space);

  // Flattened total indexing mirrors SheafAction::make.
  std::vector<std::string> total;
  for (int x = 0; x < space->size(); ++x) {
    for (int i = 0; i < sheaf.stalk_size(x); ++i) {
      total.push_back(space->point_name(x) + ":" + sheaf.elem_label(x, i));
    }
  }
  auto point = [&](std::string const& name) {
    for (size_t t = 0; t < total.size(); ++t) {
      if (total[t] == name) {
        return static_cast<int>(t);
      }
    }
    fail({"UnknownPoint", {name}, ""});
  };

  std::vector<std::vector<int>> act(sgp->size(), std::vector<int>(total.size(), -1));
  for (auto const& [elt_name, assignment] : need(j, "maps").items()) {
    int const elt = element_index(*sgp, elt_name);
    for (auto const& [x, y] : assignment.items()) {
      act[elt][point(x)] = point(y.get<std::string>());
    }
  }
  return SheafAction::make(std::move(sgp), std::move(sheaf), std::move(act));
}

SheafAction load_sheaf_action(std::string const& path) {
  return sheaf_action_from_json(load_file(path), fs::path(path).parent_path().string());
}

}  // namespace invtopos::io
