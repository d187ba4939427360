#ifndef INVTOPOS_FUNCTOR_TOOLS_HPP_
#define INVTOPOS_FUNCTOR_TOOLS_HPP_

#include <memory>
#include <string>
#include <vector>

#include "invtopos/lcat.hpp"

namespace invtopos {

// A covariant functor L(S) -> FinSet as explicit data: a finite set of
// labelled elements per object and a total map per arrow.
class SetFunctor {
 public:
  // Verifies functoriality exhaustively. Error codes: MalformedFunctor,
  // IdentityViolation(object), CompositionViolation(arrow pair).
  static SetFunctor validate(LoganPtr logan,
                             std::vector<std::vector<std::string>> obj_elems,
                             std::vector<std::vector<int>> arrow_maps);

  LoganCategory const& logan() const { return *logan_; }
  LoganPtr logan_ptr() const { return logan_; }

  int set_size(int obj) const { return static_cast<int>(obj_elems_[obj].size()); }
  std::string const& elem_label(int obj, int i) const { return obj_elems_[obj][i]; }
  std::optional<int> elem_index(int obj, std::string_view label) const;
  int map(int arrow, int i) const { return arrow_maps_[arrow][i]; }

  std::vector<std::vector<std::string>> const& object_sets() const {
    return obj_elems_;
  }
  std::vector<std::vector<int>> const& arrow_maps() const { return arrow_maps_; }

  int total_size() const;

 private:
  SetFunctor() = default;

  LoganPtr logan_;
  std::vector<std::vector<std::string>> obj_elems_;
  std::vector<std::vector<int>> arrow_maps_;
};

// The category of elements of F: objects are pairs (C, p) with p in F(C),
// arrows are the arrows of L(S) that carry p to p'.
struct ElementsCategory {
  FiniteCategory cat;
  std::vector<std::pair<int, int>> pair_of;  // object -> (base object, element)
  std::vector<int> base_arrow_of;            // arrow -> base arrow
  std::vector<std::vector<int>> object_at;   // (base object, element) -> object
};

ElementsCategory category_of_elements(SetFunctor const& f);

// The equivalence on the pairs (object, element) generated by
// (e, x) ~ (e', F(e',e)(x)) over arrows between idempotents, as a
// union-find over dense pair indices (object-major, element-minor).
UnionFind colimit_union_find(SetFunctor const& f);

// torsion-free: the generated equivalence never identifies two elements
// over the same object.
Verdict is_torsion_free(SetFunctor const& f);

// F1 and F2 on the category of elements.
Verdict is_directed(SetFunctor const& f);

// F1, F2 and F3 on the category of elements.
Verdict is_filtered(SetFunctor const& f);

// Operational rendering: the induced action of a torsion-free functor is
// strict. Throws NotTorsionFree.
bool preserves_pullbacks(SetFunctor const& f);

// Components of a natural transformation F -> G, one total map per object.
struct FunctorTransformation {
  std::vector<std::vector<int>> components;
};

Verdict check_transformation(SetFunctor const& f, SetFunctor const& g,
                             FunctorTransformation const& t);

// All natural transformations f -> g. Throws TooLarge above the cap.
std::vector<FunctorTransformation> enumerate_transformations(
    SetFunctor const& f, SetFunctor const& g, long long cap = 2'000'000);

// The functor whose value is a fixed singleton everywhere.
SetFunctor constant_singleton(LoganPtr logan);

}  // namespace invtopos

#endif  // INVTOPOS_FUNCTOR_TOOLS_HPP_
