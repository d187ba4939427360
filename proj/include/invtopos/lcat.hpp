#ifndef INVTOPOS_LCAT_HPP_
#define INVTOPOS_LCAT_HPP_

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "invtopos/sgp_core.hpp"

namespace invtopos {

struct CatArrow {
  int src = -1;
  int tgt = -1;
  std::string label;
};

// An explicit finite category: objects, arrows, a composition table and
// identity arrows. compose(g, f) is defined iff tgt(f) == src(g).
class FiniteCategory {
 public:
  FiniteCategory(std::vector<std::string> object_names,
                 std::vector<CatArrow> arrows,
                 std::vector<int> identities,
                 std::vector<std::vector<int>> compose);

  int object_count() const { return static_cast<int>(object_names_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  std::string const& object_name(int obj) const { return object_names_[obj]; }
  CatArrow const& arrow(int a) const { return arrows_[a]; }
  int identity(int obj) const { return identities_[obj]; }

  // g after f; -1 when not composable.
  int compose(int g, int f) const { return compose_[g][f]; }

  // All arrows src -> tgt in arrow-index order.
  std::vector<int> hom(int src, int tgt) const;

  // Exhaustive identity/associativity/composability check.
  Verdict check() const;

 private:
  std::vector<std::string> object_names_;
  std::vector<CatArrow> arrows_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> compose_;
};

// The poset (names, leq) as a category with at most one arrow per pair.
FiniteCategory poset_category(std::vector<std::string> const& names,
                              std::function<bool(int, int)> const& leq);

// Loganathan's category L(S): objects are the idempotents E(S); arrows
// e -> f are pairs (f, s) with d(s) = e and r(s) <= f; composition is
// (g, t) o (f, s) = (g, t s); the identity at e is (e, e).
class LoganCategory {
 public:
  static LoganCategory build(SemigroupPtr sgp);

  FiniteCategory const& cat() const { return *cat_; }
  InverseSemigroup const& sgp() const { return *sgp_; }
  SemigroupPtr sgp_ptr() const { return sgp_; }

  int object_count() const { return cat_->object_count(); }
  int arrow_count() const { return cat_->arrow_count(); }

  // Object index <-> idempotent element index.
  int object_of(int e) const;
  int idempotent_of(int obj) const { return objects_[obj]; }

  // Arrow index <-> pair (target idempotent f, element s), both as
  // element indices. arrow_index returns -1 when (f, s) is not an arrow.
  int arrow_index(int f, int s) const;
  std::pair<int, int> arrow_pair(int a) const { return pairs_[a]; }

  // All arrows e -> f between idempotents e, f, in the fixed element
  // order of S. Throws UnknownObject when e or f is not an idempotent.
  std::vector<int> hom_set(int e, int f) const;

  std::string dot() const;

 private:
  LoganCategory() = default;

  SemigroupPtr sgp_;
  std::shared_ptr<const FiniteCategory> cat_;
  std::vector<int> objects_;               // object -> idempotent element
  std::vector<int> object_of_element_;     // element -> object or -1
  std::vector<std::pair<int, int>> pairs_; // arrow -> (f, s)
  std::map<std::pair<int, int>, int> arrow_of_pair_;
};

using LoganPtr = std::shared_ptr<const LoganCategory>;

LoganPtr build_logan(SemigroupPtr sgp);

}  // namespace invtopos

#endif  // INVTOPOS_LCAT_HPP_
