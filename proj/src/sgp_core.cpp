#include "invtopos/sgp_core.hpp"

#include <algorithm>

namespace invtopos {

ElementSet sorted_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool set_contains(ElementSet const& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

InverseSemigroup InverseSemigroup::validate(std::vector<std::string> elements,
                                            std::vector<std::vector<int>> table,
                                            std::vector<int> inv,
                                            bool skip_associativity) {
  int const n = static_cast<int>(elements.size());
  if (n == 0) {
    fail({"MalformedTable", {}, "empty element list"});
  }
  if (static_cast<int>(table.size()) != n || static_cast<int>(inv.size()) != n) {
    fail({"MalformedTable", {}, "table/inv size does not match element list"});
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      fail({"MalformedTable", {elements[i]}, "row length does not match element list"});
    }
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n) {
        fail({"MalformedTable", {elements[i], elements[j]}, "entry out of range"});
      }
    }
    if (inv[i] < 0 || inv[i] >= n) {
      fail({"MalformedTable", {elements[i]}, "inverse out of range"});
    }
  }
  {
    auto sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail({"MalformedTable", {}, "duplicate element name"});
    }
  }

  if (!skip_associativity) {
    if (n > kSoftCap) {
      fail({"TooLarge",
            {std::to_string(n)},
            "exhaustive associativity check capped at " + std::to_string(kSoftCap) +
                " elements; pass skip_associativity to bypass"});
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int const ab = table[a][b];
        for (int c = 0; c < n; ++c) {
          if (table[ab][c] != table[a][table[b][c]]) {
            fail({"NonAssociative", {elements[a], elements[b], elements[c]}, ""});
          }
        }
      }
    }
  }

  for (int s = 0; s < n; ++s) {
    int const t = inv[s];
    if (table[table[s][t]][s] != s || table[table[t][s]][t] != t) {
      fail({"NotRegular", {elements[s]}, "declared inverse is not a generalized inverse"});
    }
  }

  std::vector<int> idem;
  for (int s = 0; s < n; ++s) {
    if (table[s][s] == s) {
      idem.push_back(s);
    }
  }
  for (int e : idem) {
    for (int f : idem) {
      if (table[e][f] != table[f][e]) {
        fail({"NonCommutingIdempotents", {elements[e], elements[f]}, ""});
      }
    }
  }

  for (int s = 0; s < n; ++s) {
    if (inv[inv[s]] != s) {
      fail({"NotInvolutive", {elements[s]}, "inv(inv(s)) != s"});
    }
  }

  InverseSemigroup out;
  out.names_ = std::move(elements);
  out.table_ = std::move(table);
  out.inv_ = std::move(inv);
  out.idempotents_ = std::move(idem);
  for (int i = 0; i < n; ++i) {
    out.index_.emplace(out.names_[i], i);
  }
  return out;
}

std::vector<int> InverseSemigroup::infer_inverses(
    std::vector<std::string> const& elements,
    std::vector<std::vector<int>> const& table) {
  int const n = static_cast<int>(elements.size());
  std::vector<int> inv(n, -1);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (table[table[s][t]][s] == s && table[table[t][s]][t] == t) {
        if (inv[s] != -1) {
          fail({"AmbiguousInverse",
                {elements[s], elements[inv[s]], elements[t]},
                "element has more than one generalized inverse"});
        }
        inv[s] = t;
      }
    }
    if (inv[s] == -1) {
      fail({"NotRegular", {elements[s]}, "element has no generalized inverse"});
    }
  }
  return inv;
}

std::optional<int> InverseSemigroup::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool InverseSemigroup::natural_leq(int s, int t) const {
  for (int e : idempotents_) {
    if (mul(t, e) == s) {
      return true;
    }
  }
  return false;
}

ElementSet InverseSemigroup::up_closure(ElementSet const& xs) const {
  ElementSet out;
  for (int s = 0; s < size(); ++s) {
    for (int x : xs) {
      if (natural_leq(x, s)) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

ElementSet InverseSemigroup::h_class(int e, int f) const {
  if (!is_idempotent(e)) {
    fail({"NotIdempotent", {name(e)}, ""});
  }
  if (!is_idempotent(f)) {
    fail({"NotIdempotent", {name(f)}, ""});
  }
  ElementSet out;
  for (int s = 0; s < size(); ++s) {
    if (d(s) == f && r(s) == e) {
      out.push_back(s);
    }
  }
  return out;
}

bool InverseSemigroup::d_related(int e, int f) const {
  return !h_class(e, f).empty();
}

std::vector<std::pair<int, int>> InverseSemigroup::hasse_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < size(); ++s) {
    for (int t = 0; t < size(); ++t) {
      if (s == t || !natural_leq(s, t)) {
        continue;
      }
      bool covered = true;
      for (int u = 0; u < size(); ++u) {
        if (u != s && u != t && natural_leq(s, u) && natural_leq(u, t)) {
          covered = false;
          break;
        }
      }
      if (covered) {
        out.emplace_back(s, t);
      }
    }
  }
  return out;
}

std::vector<ElementSet> InverseSemigroup::d_classes() const {
  std::vector<ElementSet> out;
  std::vector<bool> seen(size(), false);
  for (int s = 0; s < size(); ++s) {
    if (seen[s]) {
      continue;
    }
    ElementSet cls;
    for (int t = s; t < size(); ++t) {
      if (!seen[t] && d_related(d(s), d(t))) {
        cls.push_back(t);
        seen[t] = true;
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace invtopos
