#ifndef INVTOPOS_ACTIONS_HPP_
#define INVTOPOS_ACTIONS_HPP_

#include <memory>
#include <string>
#include <vector>

#include "invtopos/sgp_core.hpp"

namespace invtopos {

// A possibly non-strict S-set: each element of S acts by a partial
// injective map on a finite carrier. act[s][x] is the image index, or -1
// when s.x is undefined. Immutable after validation.
class PartialAction {
 public:
  // Checks that each act(s) is a partial bijection, that the
  // prehomomorphism law holds (st.x defined implies t.x and s.(t.x)
  // defined and equal to st.x), and that every carrier point is in some
  // domain. Error codes: NotInjective, PrehomLawViolation, NotEffective.
  // With allow_non_effective the last check is skipped.
  static PartialAction validate(SemigroupPtr sgp,
                                std::vector<std::string> carrier,
                                std::vector<std::vector<int>> act,
                                bool allow_non_effective = false);

  InverseSemigroup const& sgp() const { return *sgp_; }
  SemigroupPtr sgp_ptr() const { return sgp_; }

  int carrier_size() const { return static_cast<int>(carrier_.size()); }
  std::string const& point_name(int x) const { return carrier_[x]; }
  std::vector<std::string> const& carrier() const { return carrier_; }
  std::optional<int> point_index(std::string_view name) const;

  bool defined(int s, int x) const { return act_[s][x] >= 0; }
  int apply(int s, int x) const { return act_[s][x]; }
  std::vector<int> domain_of(int s) const;
  std::vector<std::vector<int>> const& table() const { return act_; }

 private:
  PartialAction() = default;

  SemigroupPtr sgp_;
  std::vector<std::string> carrier_;
  std::vector<std::vector<int>> act_;
};

// act(ef) == act(e) o act(f) for all idempotents e, f. The witness names
// the first failing pair.
Verdict is_strict(PartialAction const& a);

// For every point, the idempotents defined at it form a connected
// comparability graph under the natural order. The witness reports the
// point and the two components that cannot be joined.
Verdict is_connected(PartialAction const& a);

Verdict is_transitive(PartialAction const& a);

// Whenever s.x = t.x, some c <= s, t acts the same way at x.
Verdict is_free(PartialAction const& a);

// Transitive and free. Requires a strict action; throws NotStrict.
bool is_torsor(PartialAction const& a);

struct ActionMorphism {
  PartialAction source;
  PartialAction target;
  std::vector<int> map;  // total on source carrier
};

// Equivariance, checked exhaustively: s.x defined implies s.f(x) defined
// and f(s.x) = s.f(x).
Verdict check_morphism(PartialAction const& a, PartialAction const& b,
                       std::vector<int> const& map);

// All equivariant maps a -> b, in lexicographic order of the map vector.
// Throws TooLarge when |b|^|a| exceeds the cap.
std::vector<std::vector<int>> enumerate_morphisms(PartialAction const& a,
                                                  PartialAction const& b,
                                                  long long cap = 2'000'000);

// ---- Partial bijections and the symmetric inverse semigroup ----

// A partial injective self-map of {0..degree-1}; -1 marks "undefined".
using PartialMap = std::vector<int>;

PartialMap compose_partial(PartialMap const& outer, PartialMap const& inner);
PartialMap invert_partial(PartialMap const& m);
bool is_partial_injection(PartialMap const& m);
std::string partial_map_name(PartialMap const& m);

// An inverse semigroup realized by concrete partial bijections, together
// with its natural action on the points.
struct PartialBijectionSemigroup {
  SemigroupPtr sgp;
  int degree = 0;
  std::vector<PartialMap> graphs;  // per element, in element order

  PartialAction natural_action() const;
};

// Closure of the generators under composition and inverse. Throws
// TooLarge if the closure exceeds max_size.
PartialBijectionSemigroup close_partial_bijections(
    int degree, std::vector<PartialMap> const& generators, int max_size = 4096);

// I(n): all partial bijections of an n-point set.
PartialBijectionSemigroup symmetric_inverse(int degree);

}  // namespace invtopos

#endif  // INVTOPOS_ACTIONS_HPP_
