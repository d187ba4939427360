#include "invtopos/cosets_filters.hpp"

#include <algorithm>

namespace invtopos {

namespace {

void require_enumerable(InverseSemigroup const& s) {
  if (s.size() > kSubsetEnumerationCap) {
    fail({"TooLarge", {std::to_string(s.size())},
          "subset enumeration capped at " + std::to_string(kSubsetEnumerationCap)});
  }
}

ElementSet subset_of_mask(unsigned mask, int n) {
  ElementSet out;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) {
      out.push_back(i);
    }
  }
  return out;
}

bool up_closed(InverseSemigroup const& s, ElementSet const& members) {
  return s.up_closure(members) == members;
}

}  // namespace

std::string element_set_label(InverseSemigroup const& s, ElementSet const& members) {
  std::vector<std::string> names;
  names.reserve(members.size());
  for (int x : members) {
    names.push_back(s.name(x));
  }
  return "{" + join_names(names) + "}";
}

bool is_closed_inverse_subsemigroup(InverseSemigroup const& s, ElementSet const& h) {
  if (h.empty()) {
    return false;
  }
  for (int a : h) {
    if (!set_contains(h, s.inv(a))) {
      return false;
    }
    for (int b : h) {
      if (!set_contains(h, s.mul(a, b))) {
        return false;
      }
    }
  }
  return up_closed(s, h);
}

std::vector<ElementSet> enumerate_closed_subsemigroups(InverseSemigroup const& s) {
  require_enumerable(s);
  std::vector<ElementSet> out;
  for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
    ElementSet h = subset_of_mask(mask, s.size());
    if (is_closed_inverse_subsemigroup(s, h)) {
      out.push_back(std::move(h));
    }
  }
  return out;
}

CosetSpace coset_space(InverseSemigroup const& s, ElementSet const& h) {
  CosetSpace out;
  for (int x = 0; x < s.size(); ++x) {
    if (!set_contains(h, s.d(x))) {
      continue;
    }
    ElementSet xh;
    xh.reserve(h.size());
    for (int b : h) {
      xh.push_back(s.mul(x, b));
    }
    ElementSet coset = s.up_closure(sorted_set(std::move(xh)));
    if (std::find(out.cosets.begin(), out.cosets.end(), coset) == out.cosets.end()) {
      out.cosets.push_back(std::move(coset));
      out.witness.push_back(x);
    }
  }
  return out;
}

PartialAction coset_action(SemigroupPtr sgp, ElementSet const& h) {
  InverseSemigroup const& s = *sgp;
  if (!is_closed_inverse_subsemigroup(s, h)) {
    fail({"NotClosedSubsemigroup", {element_set_label(s, h)}, ""});
  }
  CosetSpace space = coset_space(s, h);
  int const k = static_cast<int>(space.cosets.size());

  std::vector<std::string> carrier;
  carrier.reserve(space.cosets.size());
  for (auto const& coset : space.cosets) {
    carrier.push_back(element_set_label(s, coset));
  }

  std::vector<std::vector<int>> act(s.size(), std::vector<int>(k, -1));
  for (int elt = 0; elt < s.size(); ++elt) {
    for (int c = 0; c < k; ++c) {
      // (s C)^up is witness-free: C already carries every generator.
      ElementSet image;
      image.reserve(space.cosets[c].size());
      for (int y : space.cosets[c]) {
        image.push_back(s.mul(elt, y));
      }
      ElementSet closed = s.up_closure(sorted_set(std::move(image)));
      auto it = std::find(space.cosets.begin(), space.cosets.end(), closed);
      if (it != space.cosets.end()) {
        act[elt][c] = static_cast<int>(it - space.cosets.begin());
      }
    }
  }

  return PartialAction::validate(std::move(sgp), std::move(carrier), std::move(act));
}

ElementSet stabilizer(PartialAction const& a, int x) {
  InverseSemigroup const& s = a.sgp();
  ElementSet h;
  for (int elt = 0; elt < s.size(); ++elt) {
    if (a.apply(elt, x) == x) {
      h.push_back(elt);
    }
  }
  if (!is_closed_inverse_subsemigroup(s, h)) {
    throw InternalCheckError("stabilizer of a strict action is not closed at point " +
                             a.point_name(x));
  }
  return h;
}

ScheinDecomposition schein_decompose(PartialAction const& a) {
  if (auto strict = is_strict(a); !strict) {
    fail({"NotStrict", strict.witness->parts, "Schein decomposition needs a strict action"});
  }
  if (auto trans = is_transitive(a); !trans) {
    fail({"NotTransitive", trans.witness->parts, "Schein decomposition needs a transitive action"});
  }

  InverseSemigroup const& s = a.sgp();
  ElementSet h = stabilizer(a, 0);
  PartialAction cosets = coset_action(a.sgp_ptr(), h);

  // y -> (sH)^up for any s with s.x0 = y.
  std::vector<int> map(a.carrier_size(), -1);
  CosetSpace space = coset_space(s, h);
  for (int y = 0; y < a.carrier_size(); ++y) {
    int mover = -1;
    for (int elt = 0; elt < s.size() && mover < 0; ++elt) {
      if (a.apply(elt, 0) == y) {
        mover = elt;
      }
    }
    if (mover < 0) {
      throw InternalCheckError("schein_decompose: transitivity lost");
    }
    ElementSet sh;
    sh.reserve(h.size());
    for (int b : h) {
      sh.push_back(s.mul(mover, b));
    }
    ElementSet coset = s.up_closure(sorted_set(std::move(sh)));
    auto it = std::find(space.cosets.begin(), space.cosets.end(), coset);
    if (it == space.cosets.end()) {
      throw InternalCheckError("schein_decompose: (sH)^up is not a coset");
    }
    map[y] = static_cast<int>(it - space.cosets.begin());
  }

  // Verified isomorphism: equivariant both ways.
  if (auto v = check_morphism(a, cosets, map); !v) {
    throw InternalCheckError("schein_decompose: forward map not equivariant: " +
                             format_witness(*v.witness));
  }
  std::vector<int> inverse(map.size(), -1);
  std::vector<bool> hit(map.size(), false);
  for (size_t y = 0; y < map.size(); ++y) {
    if (hit[map[y]]) {
      throw InternalCheckError("schein_decompose: orbit map not injective");
    }
    hit[map[y]] = true;
    inverse[map[y]] = static_cast<int>(y);
  }
  if (auto v = check_morphism(cosets, a, inverse); !v) {
    throw InternalCheckError("schein_decompose: inverse map not equivariant: " +
                             format_witness(*v.witness));
  }

  ActionMorphism iso{a, cosets, std::move(map)};
  return ScheinDecomposition{std::move(h), std::move(cosets), std::move(iso)};
}

std::vector<ElementSet> enumerate_filters_in_e(InverseSemigroup const& s) {
  require_enumerable(s);
  auto const& idems = s.idempotents();
  int const k = static_cast<int>(idems.size());
  if (k > kSubsetEnumerationCap) {
    fail({"TooLarge", {std::to_string(k)}, "too many idempotents"});
  }
  std::vector<ElementSet> out;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    ElementSet members;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        members.push_back(idems[i]);
      }
    }
    bool ok = true;
    // Up-closed within E(S); meets stay inside.
    for (int a : members) {
      for (int e : idems) {
        if (s.natural_leq(a, e) && !set_contains(members, e)) {
          ok = false;
        }
      }
      for (int b : members) {
        if (!set_contains(members, s.mul(a, b))) {
          ok = false;
        }
      }
    }
    if (ok) {
      out.push_back(std::move(members));
    }
  }
  return out;
}

std::vector<ElementSet> enumerate_filters_in_s(InverseSemigroup const& s) {
  require_enumerable(s);
  std::vector<ElementSet> out;
  for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
    ElementSet members = subset_of_mask(mask, s.size());
    if (!up_closed(s, members)) {
      continue;
    }
    bool directed = true;
    for (int a : members) {
      for (int b : members) {
        bool found = false;
        for (int c : members) {
          if (s.natural_leq(c, a) && s.natural_leq(c, b)) {
            found = true;
            break;
          }
        }
        directed = directed && found;
      }
    }
    if (directed) {
      out.push_back(std::move(members));
    }
  }
  return out;
}

bool is_universal(PartialAction const& a) {
  if (auto strict = is_strict(a); !strict) {
    fail({"NotStrict", strict.witness->parts, "universality is defined for strict actions"});
  }
  if (auto trans = is_transitive(a); !trans) {
    fail({"NotTransitive", trans.witness->parts, "universality is defined for transitive actions"});
  }
  InverseSemigroup const& s = a.sgp();
  ElementSet h = stabilizer(a, 0);
  ElementSet idem_part;
  for (int x : h) {
    if (s.is_idempotent(x)) {
      idem_part.push_back(x);
    }
  }
  return s.up_closure(idem_part) == h;
}

bool TorsorUniversalReport::consistent() const {
  return std::all_of(entries.begin(), entries.end(), [](auto const& e) {
    return e.torsor == e.universal;
  });
}

TorsorUniversalReport torsor_equiv_universal(SemigroupPtr sgp) {
  TorsorUniversalReport report;
  for (auto const& h : enumerate_closed_subsemigroups(*sgp)) {
    PartialAction a = coset_action(sgp, h);
    report.entries.push_back({h, is_torsor(a), is_universal(a)});
  }
  return report;
}

FilterGroupoidData filter_groupoid_data(InverseSemigroup const& s) {
  FilterGroupoidData out;
  out.filters_in_s = enumerate_filters_in_s(s);
  out.d_of.reserve(out.filters_in_s.size());
  for (auto const& filter : out.filters_in_s) {
    ElementSet d;
    d.reserve(filter.size());
    for (int a : filter) {
      d.push_back(s.d(a));
    }
    out.d_of.push_back(sorted_set(std::move(d)));
  }
  out.m_sets.resize(s.size());
  for (int elt = 0; elt < s.size(); ++elt) {
    for (int f = 0; f < static_cast<int>(out.filters_in_s.size()); ++f) {
      if (set_contains(out.filters_in_s[f], elt)) {
        out.m_sets[elt].push_back(f);
      }
    }
  }
  return out;
}

}  // namespace invtopos
