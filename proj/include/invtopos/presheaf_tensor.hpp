#ifndef INVTOPOS_PRESHEAF_TENSOR_HPP_
#define INVTOPOS_PRESHEAF_TENSOR_HPP_

#include <string>
#include <tuple>
#include <vector>

#include "invtopos/functor_tools.hpp"
#include "invtopos/lcat.hpp"

namespace invtopos {

// A presheaf on L(S): a finite set per object and, per arrow u: C -> C',
// a translation map P(C') -> P(C).
class Presheaf {
 public:
  // Error codes mirror SetFunctor's, with composition reversed.
  static Presheaf validate(LoganPtr logan,
                           std::vector<std::vector<std::string>> obj_elems,
                           std::vector<std::vector<int>> arrow_maps);

  LoganCategory const& logan() const { return *logan_; }
  LoganPtr logan_ptr() const { return logan_; }

  int set_size(int obj) const { return static_cast<int>(obj_elems_[obj].size()); }
  std::string const& elem_label(int obj, int i) const { return obj_elems_[obj][i]; }
  std::optional<int> elem_index(int obj, std::string_view label) const;

  // The translation along arrow a, from the target set to the source set.
  int translate(int arrow, int i) const { return arrow_maps_[arrow][i]; }

  std::vector<std::vector<std::string>> const& object_sets() const {
    return obj_elems_;
  }
  std::vector<std::vector<int>> const& arrow_maps() const { return arrow_maps_; }

  int total_size() const;

 private:
  Presheaf() = default;

  LoganPtr logan_;
  std::vector<std::vector<std::string>> obj_elems_;
  std::vector<std::vector<int>> arrow_maps_;
};

// The representable presheaf y(e): Hom(-, e) with translation by
// precomposition. e must be an idempotent of S.
Presheaf representable(LoganPtr logan, int e);

Presheaf terminal_presheaf(LoganPtr logan);

struct PresheafMorphism {
  std::vector<std::vector<int>> components;
};

Verdict check_presheaf_morphism(Presheaf const& p, Presheaf const& q,
                                PresheafMorphism const& m);

std::vector<PresheafMorphism> enumerate_presheaf_morphisms(
    Presheaf const& p, Presheaf const& q, long long cap = 2'000'000);

// Objectwise product with its two projections.
struct PresheafProduct {
  Presheaf product;
  PresheafMorphism proj_left;
  PresheafMorphism proj_right;
};
PresheafProduct presheaf_product(Presheaf const& p, Presheaf const& q);

// Objectwise disjoint union.
Presheaf presheaf_sum(Presheaf const& p, Presheaf const& q);

// The objectwise equalizer of a parallel pair, with its inclusion.
struct PresheafEqualizer {
  Presheaf equalizer;
  PresheafMorphism inclusion;
};
PresheafEqualizer presheaf_equalizer(Presheaf const& p, Presheaf const& q,
                                     PresheafMorphism const& f,
                                     PresheafMorphism const& g);

// The coend P (x) A: pairs (p, a) over a common object, modulo
// (P(u)(p'), a) ~ (p', A(u)(a)) for every arrow u.
struct TensorSet {
  std::vector<std::vector<std::tuple<int, int, int>>> classes;  // (obj, p, a)
  std::vector<std::vector<std::vector<int>>> class_of;          // [obj][p][a]
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(classes.size()); }
};

TensorSet tensor(Presheaf const& p, SetFunctor const& a);

// The map tensor(P, A) -> tensor(Q, A) induced by f: P -> Q.
std::vector<int> tensor_induced_map(PresheafMorphism const& f, TensorSet const& tp,
                                    TensorSet const& tq);

// Hom(A, R) as a presheaf: all maps A(C) -> {0..r-1}, translation by
// precomposition with A(u). Element index = base-r digits of the map.
Presheaf hom_presheaf(SetFunctor const& a, int r_size);

// Co-Yoneda: tensor(y(e), A) is in canonical bijection with A(e),
// naturally in e. Checked for a single e.
Verdict co_yoneda_check(SetFunctor const& a, int e);

struct AdjunctionReport {
  bool ok = false;
  int functions_checked = 0;       // maps tensor(P,A) -> R
  int transformations_checked = 0; // natural transformations P -> Hom(A,R)
  bool exhaustive = false;         // transformation side fully enumerated
  std::string detail;
};

// Exhibits the bijection Hom_Sets(P (x) A, R) ~ Nat(P, Hom(A, R)) by
// explicit mutually-inverse constructions; enumerates the right side
// exhaustively when it is small enough.
AdjunctionReport check_adjunction(Presheaf const& p, SetFunctor const& a,
                                  int r_size, long long enumeration_cap = 100'000);

// terminal / binary products / equalizers under tensor(-, A) on a default
// suite of presheaves (terminal, representables, a sum).
struct SpotCheckItem {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct FlatnessReport {
  bool filtered = false;
  std::vector<SpotCheckItem> items;
  bool all_preserved() const;
  std::vector<std::string> failures() const;
};

std::vector<std::pair<std::string, Presheaf>> default_presheaf_suite(LoganPtr logan);

FlatnessReport flatness_spotcheck(SetFunctor const& a);

}  // namespace invtopos

#endif  // INVTOPOS_PRESHEAF_TENSOR_HPP_
