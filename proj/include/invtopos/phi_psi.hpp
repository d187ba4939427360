#ifndef INVTOPOS_PHI_PSI_HPP_
#define INVTOPOS_PHI_PSI_HPP_

#include <string>
#include <utility>
#include <vector>

#include "invtopos/actions.hpp"
#include "invtopos/functor_tools.hpp"

namespace invtopos {

// The quotient of the pairs (object, element) by the generated
// equivalence. Canonical representative = least pair in object-major
// order; class labels are "[e,x]" built from it.
struct ColimitClasses {
  std::vector<std::vector<std::pair<int, int>>> members;  // sorted pairs
  std::vector<std::vector<int>> class_of;                 // [obj][elem]
  std::vector<std::string> labels;
};

ColimitClasses colimit_classes(SetFunctor const& f);

// Phi: the functor of an action. Phi(A)(e) is the domain of act(e),
// labelled by carrier point names; the arrow (f, s) acts by x -> s.x.
SetFunctor phi(PartialAction const& a, LoganPtr logan);
SetFunctor phi(PartialAction const& a);

// Psi: the connected action induced on the colimit classes of a
// torsion-free functor. s acts on a class containing (d(s), x) with value
// the class of (r(s), F(r(s),s)(x)). Throws NotTorsionFree.
struct PsiResult {
  PartialAction action;
  ColimitClasses classes;
};
PsiResult psi_with_classes(SetFunctor const& f);
PartialAction psi(SetFunctor const& f);

// Morphism transport: the components of phi(m) are restrictions of the
// underlying map. phi_src/phi_tgt must be phi of m's endpoints.
FunctorTransformation phi_on_morphism(ActionMorphism const& m,
                                      SetFunctor const& phi_src,
                                      SetFunctor const& phi_tgt);

// [e,x] -> [e, t_e(x)] for a natural transformation t: f -> g of
// torsion-free functors.
ActionMorphism psi_on_transformation(SetFunctor const& f, SetFunctor const& g,
                                     FunctorTransformation const& t);

// The counit [e,x] -> x from psi(phi(a)) to a. Surjective; injective iff
// the action is connected.
ActionMorphism counit_beta(PartialAction const& a);

// Unique factorization of g: A -> B through the counit of B, for
// connected A: the morphism f: A -> psi(phi(B)) with beta_B o f = g.
ActionMorphism coreflection_factor(ActionMorphism const& g);

// The canonical natural isomorphism x -> [e,x] from a torsion-free f to
// phi(psi(f)).
struct TauResult {
  SetFunctor round_trip;  // phi(psi(f))
  FunctorTransformation tau;
};
TauResult canonical_tau(SetFunctor const& f);

struct RoundTripCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RoundTripReport {
  std::vector<RoundTripCheck> checks;
  bool all_pass() const;
};

// For each torsion-free functor: tau is a natural isomorphism onto
// phi(psi(f)) and psi(f) is connected. For each action: phi is
// torsion-free, and beta is an isomorphism exactly when the action is
// connected.
RoundTripReport verify_round_trips(
    std::vector<std::pair<std::string, PartialAction>> const& actions,
    std::vector<std::pair<std::string, SetFunctor>> const& functors);

}  // namespace invtopos

#endif  // INVTOPOS_PHI_PSI_HPP_
