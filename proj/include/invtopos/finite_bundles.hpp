#ifndef INVTOPOS_FINITE_BUNDLES_HPP_
#define INVTOPOS_FINITE_BUNDLES_HPP_

#include <memory>
#include <string>
#include <vector>

#include "invtopos/lcat.hpp"
#include "invtopos/phi_psi.hpp"

namespace invtopos {

// A finite Alexandrov space: a poset of points whose opens are the
// up-sets; the minimal open neighbourhood of x is its up-set.
class FiniteSpace {
 public:
  static constexpr int kMaxBasePoints = 6;

  // Takes generating pairs x <= y, closes them reflexively/transitively
  // and rejects cycles. Capped at kMaxBasePoints points.
  static FiniteSpace validate(std::vector<std::string> points,
                              std::vector<std::pair<int, int>> leq_pairs);

  int size() const { return static_cast<int>(points_.size()); }
  std::string const& point_name(int x) const { return points_[x]; }
  std::vector<std::string> const& points() const { return points_; }
  std::optional<int> point_index(std::string_view name) const;
  bool leq(int x, int y) const { return leq_[x][y]; }

 private:
  FiniteSpace() = default;

  std::vector<std::string> points_;
  std::vector<std::vector<bool>> leq_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

SpacePtr one_point_space();
SpacePtr sierpinski_space();      // c <= o
SpacePtr discrete_space(int n);

// A sheaf on a finite Alexandrov space, stored stalk-wise: a set per
// point and a generization map res(x,y): E_x -> E_y for every x <= y.
class FiniteSheaf {
 public:
  static FiniteSheaf validate(
      SpacePtr space, std::vector<std::vector<std::string>> stalks,
      std::vector<std::vector<std::vector<int>>> res);

  FiniteSpace const& space() const { return *space_; }
  SpacePtr space_ptr() const { return space_; }

  int stalk_size(int x) const { return static_cast<int>(stalks_[x].size()); }
  std::string const& elem_label(int x, int i) const { return stalks_[x][i]; }
  std::optional<int> elem_index(int x, std::string_view label) const;
  int res(int x, int y, int i) const { return res_[x][y][i]; }
  std::vector<std::vector<std::string>> const& stalks() const { return stalks_; }
  std::vector<std::vector<std::vector<int>>> const& res_maps() const { return res_; }

 private:
  FiniteSheaf() = default;

  SpacePtr space_;
  std::vector<std::vector<std::string>> stalks_;
  std::vector<std::vector<std::vector<int>>> res_;
};

// A functor L(S) -> Sh(X): a sheaf per object and a stalk-wise sheaf map
// per arrow, natural with respect to the generization maps.
class Bundle {
 public:
  static Bundle validate(
      LoganPtr logan, SpacePtr space, std::vector<FiniteSheaf> sheaves,
      std::vector<std::vector<std::vector<int>>> arrow_maps);  // [arrow][point][elem]

  LoganCategory const& logan() const { return *logan_; }
  LoganPtr logan_ptr() const { return logan_; }
  FiniteSpace const& space() const { return *space_; }
  SpacePtr space_ptr() const { return space_; }

  FiniteSheaf const& sheaf(int obj) const { return sheaves_[obj]; }
  int arrow_map(int arrow, int point, int elem) const {
    return arrow_maps_[arrow][point][elem];
  }
  std::vector<std::vector<std::vector<int>>> const& arrow_maps() const {
    return arrow_maps_;
  }

  // The restriction of the bundle to the stalks over x.
  SetFunctor stalk_functor(int x) const;

 private:
  Bundle() = default;

  LoganPtr logan_;
  SpacePtr space_;
  std::vector<FiniteSheaf> sheaves_;
  std::vector<std::vector<std::vector<int>>> arrow_maps_;
};

// An etale space with an S-action on its total set. Total points are the
// stalk elements, named "point:label".
struct SheafAction {
  SemigroupPtr sgp;
  SpacePtr space;
  FiniteSheaf sheaf;
  PartialAction action;                      // on the flattened total set
  std::vector<std::vector<int>> flat;        // [point][elem] -> total index
  std::vector<std::pair<int, int>> unflat;   // total index -> (point, elem)

  static SheafAction make(SemigroupPtr sgp, FiniteSheaf sheaf,
                          std::vector<std::vector<int>> act);  // [s][total]
};

// PB1-PB3 for every stalk, checked as filteredness of the stalk functor.
Verdict is_principal(Bundle const& b);

struct UniversalSheafReport {
  struct Item {
    std::string axiom;
    bool holds = false;
    std::string detail;
  };
  std::vector<Item> items;
  bool ok() const;
};

// U1 (effective on stalks), U2 (domains open), U3 (stalks invariant),
// U4 (universal on stalks), U5 (action commutes with generization).
UniversalSheafReport check_universal_sheaf_action(SheafAction const& sa);

// Stalk-wise application of psi to a principal bundle. Throws NotPrincipal.
SheafAction tau(Bundle const& b);

// Stalk-wise application of phi to a universal sheaf action. Throws
// NotUniversal.
Bundle rho(SheafAction const& sa);

// A stalk-wise natural family of maps E(c) -> E'(c).
struct BundleMorphism {
  std::vector<std::vector<std::vector<int>>> components;  // [obj][point][elem]
};

Verdict check_bundle_morphism(Bundle const& b, Bundle const& b2,
                              BundleMorphism const& m);

// Transport along tau: the total map induced stalk-wise on the colimit
// classes.
std::vector<int> tau_on_morphism(Bundle const& b, Bundle const& b2,
                                 BundleMorphism const& m, SheafAction const& ta,
                                 SheafAction const& tb);

// Transport along rho: a morphism of sheaf actions restricted to each
// object's subsheaf.
BundleMorphism rho_on_morphism(SheafAction const& sa, SheafAction const& sb,
                               std::vector<int> const& total_map);

struct BundleEquivReport {
  std::vector<RoundTripCheck> checks;
  bool all_pass() const;
};

// rho(tau(B)) isomorphic to B and tau(rho(SA)) isomorphic to SA, via the
// canonical stalk-wise isomorphisms, commuting with generization.
BundleEquivReport verify_bundle_equiv(
    std::vector<std::pair<std::string, Bundle>> const& bundles,
    std::vector<std::pair<std::string, SheafAction>> const& sheaf_actions);

// Constant bundle: the same stalk functor over every point, identity
// generization maps.
Bundle constant_bundle(SetFunctor const& f, SpacePtr space);

// SheafAction with one stalk per point of a one-point space.
SheafAction sheaf_action_over_point(PartialAction const& a);

}  // namespace invtopos

#endif  // INVTOPOS_FINITE_BUNDLES_HPP_
