#ifndef INVTOPOS_COSETS_FILTERS_HPP_
#define INVTOPOS_COSETS_FILTERS_HPP_

#include <string>
#include <vector>

#include "invtopos/actions.hpp"
#include "invtopos/sgp_core.hpp"

namespace invtopos {

// Subset enumeration is exponential; fixtures stay tiny.
inline constexpr int kSubsetEnumerationCap = 16;

// H nonempty, closed under product and inverse, with H^up = H.
bool is_closed_inverse_subsemigroup(InverseSemigroup const& s, ElementSet const& h);

// All closed inverse subsemigroups, ordered by the subset bitmask over
// the fixed element order. Throws TooLarge above the cap.
std::vector<ElementSet> enumerate_closed_subsemigroups(InverseSemigroup const& s);

struct CosetSpace {
  std::vector<ElementSet> cosets;  // distinct sets (xH)^up, discovery order
  std::vector<int> witness;        // a generating x with d(x) in H
};

// All cosets (xH)^up over x with d(x) in H.
CosetSpace coset_space(InverseSemigroup const& s, ElementSet const& h);

// The action s.(xH)^up = (sxH)^up, defined iff the right side is again a
// coset. Carrier points are labelled "{...}" by their member names.
PartialAction coset_action(SemigroupPtr sgp, ElementSet const& h);

// {s : s.x = x}, verified to be a closed inverse subsemigroup.
ElementSet stabilizer(PartialAction const& a, int x);

struct ScheinDecomposition {
  ElementSet h;          // stabilizer of the first carrier point
  PartialAction cosets;  // coset_action(S, h)
  ActionMorphism iso;    // a -> cosets, verified invertible equivariant
};

// Writes a strict transitive action as the coset action of the
// stabilizer of its first point. Throws NotStrict / NotTransitive.
ScheinDecomposition schein_decompose(PartialAction const& a);

// Filters in the idempotent semilattice: nonempty, up-closed,
// meet-closed subsets of E(S).
std::vector<ElementSet> enumerate_filters_in_e(InverseSemigroup const& s);

// Filters in S under the natural order: nonempty, up-closed, downward
// directed.
std::vector<ElementSet> enumerate_filters_in_s(InverseSemigroup const& s);

// A strict transitive action is universal iff its stabilizer H satisfies
// H = E(H)^up. Throws NotStrict / NotTransitive.
bool is_universal(PartialAction const& a);

struct TorsorUniversalEntry {
  ElementSet h;
  bool torsor = false;
  bool universal = false;
};

struct TorsorUniversalReport {
  std::vector<TorsorUniversalEntry> entries;
  bool consistent() const;
};

// For every closed H: is_torsor(coset_action) must agree with
// is_universal(coset_action). Any mismatch is an implementation bug.
TorsorUniversalReport torsor_equiv_universal(SemigroupPtr sgp);

struct FilterGroupoidData {
  std::vector<ElementSet> filters_in_s;
  std::vector<ElementSet> d_of;    // per filter F: {d(a) : a in F}
  std::vector<ElementSet> m_sets;  // per element s: indices of filters containing s
};

FilterGroupoidData filter_groupoid_data(InverseSemigroup const& s);

std::string element_set_label(InverseSemigroup const& s, ElementSet const& members);

}  // namespace invtopos

#endif  // INVTOPOS_COSETS_FILTERS_HPP_
