#include "invtopos/random_gen.hpp"

#include <algorithm>

namespace invtopos {

namespace {

PartialMap random_partial_injection(std::mt19937_64& rng, int degree) {
  std::vector<int> targets(degree);
  std::iota(targets.begin(), targets.end(), 0);
  std::shuffle(targets.begin(), targets.end(), rng);
  PartialMap m(degree, -1);
  std::bernoulli_distribution keep(0.6);
  for (int x = 0; x < degree; ++x) {
    if (keep(rng)) {
      m[x] = targets[x];
    }
  }
  return m;
}

// Shrink product domains until the prehomomorphism law holds, dropping
// carrier points that end up in no domain. Returns the surviving points.
std::vector<bool> repair(InverseSemigroup const& s,
                         std::vector<std::vector<int>>& act, int m) {
  int const n = s.size();
  std::vector<bool> alive(m, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int const ab = s.mul(a, b);
        for (int x = 0; x < m; ++x) {
          if (act[ab][x] < 0) {
            continue;
          }
          int const bx = act[b][x];
          if (bx < 0 || act[a][bx] < 0) {
            act[ab][x] = -1;
            changed = true;
          }
        }
      }
    }
    for (int x = 0; x < m; ++x) {
      if (!alive[x]) {
        continue;
      }
      bool covered = false;
      for (int i = 0; i < n && !covered; ++i) {
        covered = act[i][x] >= 0;
      }
      if (!covered) {
        alive[x] = false;
        changed = true;
        for (int i = 0; i < n; ++i) {
          act[i][x] = -1;
          for (int y = 0; y < m; ++y) {
            if (act[i][y] == x) {
              act[i][y] = -1;
            }
          }
        }
      }
    }
  }
  return alive;
}

std::optional<PartialAction> compact_action(SemigroupPtr sgp,
                                            std::vector<std::string> const& names,
                                            std::vector<std::vector<int>> const& act,
                                            std::vector<bool> const& alive) {
  int const m = static_cast<int>(alive.size());
  std::vector<int> new_index(m, -1);
  std::vector<std::string> carrier;
  for (int x = 0; x < m; ++x) {
    if (alive[x]) {
      new_index[x] = static_cast<int>(carrier.size());
      carrier.push_back(names[x]);
    }
  }
  if (carrier.empty()) {
    return std::nullopt;
  }
  std::vector<std::vector<int>> compact(sgp->size(),
                                        std::vector<int>(carrier.size(), -1));
  for (int i = 0; i < sgp->size(); ++i) {
    for (int x = 0; x < m; ++x) {
      if (alive[x] && act[i][x] >= 0) {
        compact[i][new_index[x]] = new_index[act[i][x]];
      }
    }
  }
  return PartialAction::validate(std::move(sgp), std::move(carrier),
                                 std::move(compact));
}

}  // namespace

PartialBijectionSemigroup random_inverse_semigroup(std::mt19937_64& rng,
                                                   RandomConfig const& cfg) {
  std::uniform_int_distribution<int> gen_count(1, cfg.max_generators);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<PartialMap> gens;
    int const k = gen_count(rng);
    for (int i = 0; i < k; ++i) {
      gens.push_back(random_partial_injection(rng, cfg.degree));
    }
    try {
      return close_partial_bijections(cfg.degree, gens, cfg.max_semigroup);
    } catch (ValidationError const&) {
      continue;  // closure too large, try again
    }
  }
  // Guaranteed-tiny fallback: a single partial identity.
  PartialMap id(cfg.degree, -1);
  id[0] = 0;
  return close_partial_bijections(cfg.degree, {id}, cfg.max_semigroup);
}

PartialAction random_action(std::mt19937_64& rng, RandomConfig const& cfg) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    PartialBijectionSemigroup pbs = random_inverse_semigroup(rng, cfg);
    InverseSemigroup const& s = *pbs.sgp;
    int const m = pbs.degree;

    std::vector<std::vector<int>> act(s.size());
    for (int i = 0; i < s.size(); ++i) {
      act[i] = pbs.graphs[i];
    }
    std::bernoulli_distribution strict(cfg.strict_probability);
    if (!strict(rng)) {
      std::bernoulli_distribution keep(cfg.keep_probability);
      for (int i = 0; i < s.size(); ++i) {
        for (int x = 0; x < m; ++x) {
          if (act[i][x] >= 0 && !keep(rng)) {
            act[i][x] = -1;
          }
        }
      }
    }

    auto alive = repair(s, act, m);
    int const survivors = static_cast<int>(std::count(alive.begin(), alive.end(), true));
    if (survivors == 0 || survivors > cfg.max_carrier) {
      continue;
    }
    std::vector<std::string> names;
    for (int x = 0; x < m; ++x) {
      names.push_back(std::to_string(x + 1));
    }
    if (auto out = compact_action(pbs.sgp, names, act, alive)) {
      return *out;
    }
  }
  fail({"RandomGenerationFailed", {}, "no valid instance after 200 attempts"});
}

std::optional<PartialAction> random_restriction(std::mt19937_64& rng,
                                                PartialAction const& base,
                                                double keep_probability) {
  auto act = base.table();
  std::bernoulli_distribution keep(keep_probability);
  for (auto& row : act) {
    for (int& v : row) {
      if (v >= 0 && !keep(rng)) {
        v = -1;
      }
    }
  }
  auto alive = repair(base.sgp(), act, base.carrier_size());
  return compact_action(base.sgp_ptr(), base.carrier(), act, alive);
}

}  // namespace invtopos
