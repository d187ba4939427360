#include "invtopos/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace invtopos::fixtures {

namespace {

SemigroupPtr make(std::vector<std::string> names,
                  std::vector<std::vector<int>> table, std::vector<int> inv) {
  return std::make_shared<const InverseSemigroup>(InverseSemigroup::validate(
      std::move(names), std::move(table), std::move(inv)));
}

// Build a Cayley table from a multiplication given on names.
SemigroupPtr from_rule(std::vector<std::string> names,
                       std::function<int(int, int)> const& mul,
                       std::function<int(int)> const& inv_of) {
  int const n = static_cast<int>(names.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    inv[a] = inv_of(a);
    for (int b = 0; b < n; ++b) {
      table[a][b] = mul(a, b);
    }
  }
  return make(std::move(names), std::move(table), std::move(inv));
}

PartialAction from_defined_pairs(
    SemigroupPtr sgp, std::vector<std::string> carrier,
    std::map<std::string, std::map<std::string, std::string>> const& maps,
    bool allow_non_effective = false) {
  InverseSemigroup const& s = *sgp;
  int const m = static_cast<int>(carrier.size());
  auto point = [&](std::string const& name) {
    for (int x = 0; x < m; ++x) {
      if (carrier[x] == name) {
        return x;
      }
    }
    fail({"UnknownPoint", {name}, ""});
  };
  std::vector<std::vector<int>> act(s.size(), std::vector<int>(m, -1));
  for (auto const& [elt, assignment] : maps) {
    auto const idx = s.index(elt);
    if (!idx) {
      fail({"UnknownElement", {elt}, ""});
    }
    for (auto const& [x, y] : assignment) {
      act[*idx][point(x)] = point(y);
    }
  }
  return PartialAction::validate(std::move(sgp), std::move(carrier),
                                 std::move(act), allow_non_effective);
}

}  // namespace

SemigroupPtr z3() {
  // 1, a, b with b = a^2.
  static SemigroupPtr s = from_rule(
      {"1", "a", "b"}, [](int x, int y) { return (x + y) % 3; },
      [](int x) { return (3 - x) % 3; });
  return s;
}

SemigroupPtr sl3() {
  // Meets: e ^ e = e, f ^ f = f, everything else g.
  static SemigroupPtr s = from_rule(
      {"e", "f", "g"}, [](int x, int y) { return x == y ? x : 2; },
      [](int x) { return x; });
  return s;
}

SemigroupPtr ch2() {
  static SemigroupPtr s = from_rule(
      {"e", "g"}, [](int x, int y) { return std::max(x, y); },
      [](int x) { return x; });
  return s;
}

SemigroupPtr ch3() {
  // c0 > c1 > c2 as a chain under min = multiplication at higher index.
  static SemigroupPtr s = from_rule(
      {"c0", "c1", "c2"}, [](int x, int y) { return std::max(x, y); },
      [](int x) { return x; });
  return s;
}

SemigroupPtr d4() {
  // Diamond semilattice: top h, incomparable e and f, bottom g = ef.
  static SemigroupPtr s = from_rule(
      {"h", "e", "f", "g"},
      [](int x, int y) {
        if (x == y) {
          return x;
        }
        if (x == 0) {
          return y;
        }
        if (y == 0) {
          return x;
        }
        return 3;
      },
      [](int x) { return x; });
  return s;
}

SemigroupPtr b2() {
  // Brandt semigroup: a = (1,2), a' = (2,1), e1 = (1,1), e2 = (2,2), 0.
  static SemigroupPtr s = [] {
    std::vector<std::string> names = {"a", "a'", "e1", "e2", "0"};
    auto row = [](int x) -> std::pair<int, int> {
      switch (x) {
        case 0: return {1, 2};
        case 1: return {2, 1};
        case 2: return {1, 1};
        case 3: return {2, 2};
        default: return {0, 0};
      }
    };
    auto of_pair = [](int i, int j) {
      if (i == 1) {
        return j == 2 ? 0 : 2;  // (1,2) = a, (1,1) = e1
      }
      return j == 1 ? 1 : 3;    // (2,1) = a', (2,2) = e2
    };
    int const n = 5;
    std::vector<std::vector<int>> table(n, std::vector<int>(n, 4));
    for (int x = 0; x < 4; ++x) {
      for (int y = 0; y < 4; ++y) {
        auto const [xi, xj] = row(x);
        auto const [yi, yj] = row(y);
        if (xj == yi) {
          table[x][y] = of_pair(xi, yj);
        }
      }
    }
    std::vector<int> inv = {1, 0, 2, 3, 4};
    return make(std::move(names), std::move(table), std::move(inv));
  }();
  return s;
}

SemigroupPtr i2() {
  static SemigroupPtr s = symmetric_inverse(2).sgp;
  return s;
}

SemigroupPtr sl3_monoid() {
  // SL3 with a top identity adjoined; still a semilattice.
  static SemigroupPtr s = from_rule(
      {"1", "e", "f", "g"},
      [](int x, int y) {
        if (x == 0) {
          return y;
        }
        if (y == 0) {
          return x;
        }
        return x == y ? x : 3;
      },
      [](int x) { return x; });
  return s;
}

PartialAction ex33_action() {
  return from_defined_pairs(sl3(), {"1", "2"},
                            {{"e", {{"1", "1"}, {"2", "2"}}},
                             {"f", {{"1", "1"}, {"2", "2"}}},
                             {"g", {{"1", "1"}}}});
}

PartialAction b2_natural_action() {
  return from_defined_pairs(b2(), {"1", "2"},
                            {{"a", {{"2", "1"}}},
                             {"a'", {{"1", "2"}}},
                             {"e1", {{"1", "1"}}},
                             {"e2", {{"2", "2"}}}});
}

PartialAction z3_regular() {
  auto s = z3();
  std::vector<std::vector<int>> act(3, std::vector<int>(3, -1));
  for (int g = 0; g < 3; ++g) {
    for (int x = 0; x < 3; ++x) {
      act[g][x] = s->mul(g, x);
    }
  }
  return PartialAction::validate(s, {"p1", "pa", "pb"}, std::move(act));
}

PartialAction z3_double() {
  auto s = z3();
  std::vector<std::vector<int>> act(3, std::vector<int>(6, -1));
  for (int g = 0; g < 3; ++g) {
    for (int x = 0; x < 3; ++x) {
      act[g][x] = s->mul(g, x);
      act[g][3 + x] = 3 + s->mul(g, x);
    }
  }
  return PartialAction::validate(s, {"p1", "pa", "pb", "q1", "qa", "qb"},
                                 std::move(act));
}

PartialAction sl3_point_action() {
  return from_defined_pairs(sl3(), {"1"},
                            {{"e", {{"1", "1"}}},
                             {"f", {{"1", "1"}}},
                             {"g", {{"1", "1"}}}});
}

PartialAction i2_natural_action() {
  return symmetric_inverse(2).natural_action();
}

PartialAction sl3_monoid_ex33() {
  return from_defined_pairs(sl3_monoid(), {"1", "2"},
                            {{"1", {{"1", "1"}, {"2", "2"}}},
                             {"e", {{"1", "1"}, {"2", "2"}}},
                             {"f", {{"1", "1"}, {"2", "2"}}},
                             {"g", {{"1", "1"}}}});
}

PartialAction z3_onepoint() {
  return from_defined_pairs(
      z3(), {"1"},
      {{"1", {{"1", "1"}}}, {"a", {{"1", "1"}}}, {"b", {{"1", "1"}}}});
}

PartialAction d4_diag_action() {
  // h, e, f act at the single point, the meet g does not: connected (via
  // the top) but never strict, even after the coreflector.
  return from_defined_pairs(d4(), {"1"},
                            {{"h", {{"1", "1"}}},
                             {"e", {{"1", "1"}}},
                             {"f", {{"1", "1"}}}});
}

std::vector<std::vector<int>> ch3_meet_tables() {
  // x acts by y -> x ^ y = max index; total and not injective.
  std::vector<std::vector<int>> act(3, std::vector<int>(3, -1));
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      act[x][y] = std::max(x, y);
    }
  }
  return act;
}

std::vector<std::string> semigroup_names() {
  return {"Z3", "SL3", "CH2", "B2", "I2", "SL31", "CH3", "D4"};
}

std::vector<std::string> action_names() {
  return {"ex33-action",  "b2-natural-action", "z3-regular",
          "z3-double",    "sl3-point-action",  "i2-natural-action",
          "sl31-ex33",    "z3-onepoint",       "d4-diag"};
}

SemigroupPtr semigroup_by_name(std::string const& name) {
  if (name == "Z3") return z3();
  if (name == "SL3") return sl3();
  if (name == "CH2") return ch2();
  if (name == "B2") return b2();
  if (name == "I2") return i2();
  if (name == "SL31") return sl3_monoid();
  if (name == "CH3") return ch3();
  if (name == "D4") return d4();
  fail({"UnknownFixture", {name}, ""});
}

PartialAction action_by_name(std::string const& name) {
  if (name == "ex33-action") return ex33_action();
  if (name == "b2-natural-action") return b2_natural_action();
  if (name == "z3-regular") return z3_regular();
  if (name == "z3-double") return z3_double();
  if (name == "sl3-point-action") return sl3_point_action();
  if (name == "i2-natural-action") return i2_natural_action();
  if (name == "sl31-ex33") return sl3_monoid_ex33();
  if (name == "z3-onepoint") return z3_onepoint();
  if (name == "d4-diag") return d4_diag_action();
  fail({"UnknownFixture", {name}, ""});
}

}  // namespace invtopos::fixtures
