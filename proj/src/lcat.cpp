#include "invtopos/lcat.hpp"

#include <sstream>

namespace invtopos {

FiniteCategory::FiniteCategory(std::vector<std::string> object_names,
                               std::vector<CatArrow> arrows,
                               std::vector<int> identities,
                               std::vector<std::vector<int>> compose)
    : object_names_(std::move(object_names)),
      arrows_(std::move(arrows)),
      identities_(std::move(identities)),
      compose_(std::move(compose)) {}

std::vector<int> FiniteCategory::hom(int src, int tgt) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a) {
    if (arrows_[a].src == src && arrows_[a].tgt == tgt) {
      out.push_back(a);
    }
  }
  return out;
}

Verdict FiniteCategory::check() const {
  for (int obj = 0; obj < object_count(); ++obj) {
    int const id = identities_[obj];
    if (id < 0 || id >= arrow_count() || arrows_[id].src != obj ||
        arrows_[id].tgt != obj) {
      return Verdict::no({"BadIdentity", {object_name(obj)}, "identity arrow missing or not an endomorphism"});
    }
  }
  for (int g = 0; g < arrow_count(); ++g) {
    for (int f = 0; f < arrow_count(); ++f) {
      bool const composable = arrows_[f].tgt == arrows_[g].src;
      int const gf = compose_[g][f];
      if (composable != (gf >= 0)) {
        return Verdict::no({"BadComposability",
                            {arrows_[g].label, arrows_[f].label},
                            composable ? "composable pair has no composite"
                                       : "composite defined for non-composable pair"});
      }
      if (gf >= 0 &&
          (arrows_[gf].src != arrows_[f].src || arrows_[gf].tgt != arrows_[g].tgt)) {
        return Verdict::no({"BadComposite", {arrows_[g].label, arrows_[f].label},
                            "composite has wrong endpoints"});
      }
    }
  }
  for (int f = 0; f < arrow_count(); ++f) {
    if (compose_[identities_[arrows_[f].tgt]][f] != f ||
        compose_[f][identities_[arrows_[f].src]] != f) {
      return Verdict::no({"IdentityLaw", {arrows_[f].label}, ""});
    }
  }
  for (int h = 0; h < arrow_count(); ++h) {
    for (int g = 0; g < arrow_count(); ++g) {
      if (arrows_[g].tgt != arrows_[h].src) {
        continue;
      }
      int const hg = compose_[h][g];
      for (int f = 0; f < arrow_count(); ++f) {
        if (arrows_[f].tgt != arrows_[g].src) {
          continue;
        }
        if (compose_[hg][f] != compose_[h][compose_[g][f]]) {
          return Verdict::no({"NonAssociativeComposition",
                              {arrows_[h].label, arrows_[g].label, arrows_[f].label},
                              ""});
        }
      }
    }
  }
  return Verdict::yes();
}

FiniteCategory poset_category(std::vector<std::string> const& names,
                              std::function<bool(int, int)> const& leq) {
  int const n = static_cast<int>(names.size());
  std::vector<CatArrow> arrows;
  std::vector<std::vector<int>> arrow_at(n, std::vector<int>(n, -1));
  std::vector<int> identities(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (leq(a, b)) {
        arrow_at[a][b] = static_cast<int>(arrows.size());
        arrows.push_back({a, b, names[a] + "<=" + names[b]});
        if (a == b) {
          identities[a] = arrow_at[a][b];
        }
      }
    }
  }
  std::vector<std::vector<int>> compose(arrows.size(),
                                        std::vector<int>(arrows.size(), -1));
  for (size_t g = 0; g < arrows.size(); ++g) {
    for (size_t f = 0; f < arrows.size(); ++f) {
      if (arrows[f].tgt == arrows[g].src) {
        compose[g][f] = arrow_at[arrows[f].src][arrows[g].tgt];
      }
    }
  }
  return FiniteCategory(names, std::move(arrows), std::move(identities),
                        std::move(compose));
}

LoganCategory LoganCategory::build(SemigroupPtr sgp) {
  InverseSemigroup const& s = *sgp;
  LoganCategory out;
  out.sgp_ = sgp;
  out.objects_ = s.idempotents();
  out.object_of_element_.assign(s.size(), -1);
  std::vector<std::string> object_names;
  for (size_t i = 0; i < out.objects_.size(); ++i) {
    out.object_of_element_[out.objects_[i]] = static_cast<int>(i);
    object_names.push_back(s.name(out.objects_[i]));
  }

  std::vector<CatArrow> arrows;
  for (int elt = 0; elt < s.size(); ++elt) {
    for (int f : s.idempotents()) {
      if (s.natural_leq(s.r(elt), f)) {
        int const a = static_cast<int>(arrows.size());
        out.pairs_.emplace_back(f, elt);
        out.arrow_of_pair_[{f, elt}] = a;
        arrows.push_back({out.object_of_element_[s.d(elt)],
                          out.object_of_element_[f],
                          "(" + s.name(f) + "," + s.name(elt) + ")"});
      }
    }
  }

  std::vector<int> identities(out.objects_.size(), -1);
  for (size_t i = 0; i < out.objects_.size(); ++i) {
    identities[i] = out.arrow_of_pair_.at({out.objects_[i], out.objects_[i]});
  }

  int const m = static_cast<int>(arrows.size());
  std::vector<std::vector<int>> compose(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      if (arrows[f].tgt != arrows[g].src) {
        continue;
      }
      auto const [g_tgt, t] = out.pairs_[g];
      auto const [f_tgt, u] = out.pairs_[f];
      compose[g][f] = out.arrow_of_pair_.at({g_tgt, s.mul(t, u)});
    }
  }

  out.cat_ = std::make_shared<const FiniteCategory>(
      std::move(object_names), std::move(arrows), std::move(identities),
      std::move(compose));
  return out;
}

int LoganCategory::object_of(int e) const {
  int const obj = e >= 0 && e < static_cast<int>(object_of_element_.size())
                      ? object_of_element_[e]
                      : -1;
  if (obj < 0) {
    fail({"UnknownObject", {e >= 0 && e < sgp_->size() ? sgp_->name(e) : std::to_string(e)},
          "not an idempotent of S"});
  }
  return obj;
}

int LoganCategory::arrow_index(int f, int s) const {
  auto it = arrow_of_pair_.find({f, s});
  return it == arrow_of_pair_.end() ? -1 : it->second;
}

std::vector<int> LoganCategory::hom_set(int e, int f) const {
  int const src = object_of(e);
  int const tgt = object_of(f);
  std::vector<int> out;
  for (int s = 0; s < sgp_->size(); ++s) {
    if (sgp_->d(s) == e) {
      int const a = arrow_index(f, s);
      if (a >= 0 && cat_->arrow(a).src == src && cat_->arrow(a).tgt == tgt) {
        out.push_back(a);
      }
    }
  }
  return out;
}

std::string LoganCategory::dot() const {
  std::ostringstream out;
  out << "digraph L {\n";
  for (int obj = 0; obj < cat_->object_count(); ++obj) {
    out << "  n" << obj << " [label=\"" << cat_->object_name(obj) << "\"];\n";
  }
  for (int a = 0; a < cat_->arrow_count(); ++a) {
    auto const& arr = cat_->arrow(a);
    out << "  n" << arr.src << " -> n" << arr.tgt << " [label=\"" << arr.label
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

LoganPtr build_logan(SemigroupPtr sgp) {
  return std::make_shared<const LoganCategory>(LoganCategory::build(std::move(sgp)));
}

}  // namespace invtopos
