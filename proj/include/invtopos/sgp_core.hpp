#ifndef INVTOPOS_SGP_CORE_HPP_
#define INVTOPOS_SGP_CORE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "invtopos/common.hpp"

namespace invtopos {

// A set of elements of a fixed semigroup, stored as sorted indices.
using ElementSet = std::vector<int>;

ElementSet sorted_set(std::vector<int> v);
bool set_contains(ElementSet const& s, int x);

// A finite inverse semigroup given by its Cayley table and inverse map.
// Elements are identified by opaque names mapped to dense indices; all
// inner loops work on indices. Instances are immutable once validated.
class InverseSemigroup {
 public:
  // Checks the inverse-semigroup axioms and returns a validated instance.
  // Throws ValidationError with codes MalformedTable, NonAssociative,
  // NotRegular, NonCommutingIdempotents or NotInvolutive, each carrying a
  // witness. Associativity is O(n^3); above kSoftCap elements it must be
  // explicitly skipped.
  static InverseSemigroup validate(std::vector<std::string> elements,
                                   std::vector<std::vector<int>> table,
                                   std::vector<int> inv,
                                   bool skip_associativity = false);

  // Convenience mode: search the unique generalized inverse of each element
  // instead of taking it as input. Fails with NotRegular or
  // AmbiguousInverse if none or several exist.
  static std::vector<int> infer_inverses(std::vector<std::string> const& elements,
                                         std::vector<std::vector<int>> const& table);

  static constexpr int kSoftCap = 512;

  int size() const { return static_cast<int>(names_.size()); }
  std::string const& name(int s) const { return names_[s]; }
  std::vector<std::string> const& names() const { return names_; }
  std::optional<int> index(std::string_view name) const;

  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int s) const { return inv_[s]; }
  int d(int s) const { return table_[inv_[s]][s]; }   // s^-1 s
  int r(int s) const { return table_[s][inv_[s]]; }   // s s^-1

  bool is_idempotent(int s) const { return table_[s][s] == s; }
  ElementSet const& idempotents() const { return idempotents_; }

  // s <= t in the natural partial order: s = t e for some idempotent e.
  bool natural_leq(int s, int t) const;

  // {s : s >= x for some x in xs}. A closure operator.
  ElementSet up_closure(ElementSet const& xs) const;

  // H(e,f) = {s : d(s) = f, r(s) = e}. Throws NotIdempotent.
  ElementSet h_class(int e, int f) const;

  // Whether some s has d(s) = f and r(s) = e. Throws NotIdempotent.
  bool d_related(int e, int f) const;

  // Covering pairs (s, t) with s < t and nothing strictly between.
  std::vector<std::pair<int, int>> hasse_pairs() const;

  // Partition of S by the D relation (s D t iff d(s) and d(t) are
  // d_related), in deterministic order.
  std::vector<ElementSet> d_classes() const;

  std::vector<std::vector<int>> const& table() const { return table_; }
  std::vector<int> const& inverses() const { return inv_; }

 private:
  InverseSemigroup() = default;

  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::unordered_map<std::string, int> index_;
  ElementSet idempotents_;
};

using SemigroupPtr = std::shared_ptr<const InverseSemigroup>;

}  // namespace invtopos

#endif  // INVTOPOS_SGP_CORE_HPP_
