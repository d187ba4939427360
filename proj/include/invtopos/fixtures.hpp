#ifndef INVTOPOS_FIXTURES_HPP_
#define INVTOPOS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "invtopos/actions.hpp"
#include "invtopos/sgp_core.hpp"

namespace invtopos::fixtures {

// Canonical semigroups. Every acceptance check references these by name.
SemigroupPtr z3();          // cyclic group of order 3
SemigroupPtr sl3();         // semilattice {e, f, g}, ef = g, g below both
SemigroupPtr ch2();         // 2-chain semilattice g < e
SemigroupPtr b2();          // 5-element Brandt semigroup
SemigroupPtr i2();          // symmetric inverse semigroup on 2 points
SemigroupPtr sl3_monoid();  // SL3 with an adjoined identity
SemigroupPtr ch3();         // 3-chain semilattice c0 < c1 < c2
SemigroupPtr d4();          // diamond semilattice h > e, f > g

// Canonical actions.
PartialAction ex33_action();        // SL3 on {1,2}: e, f total, g only at 1
PartialAction b2_natural_action();  // B2 on {1,2} by its partial bijections
PartialAction z3_regular();         // Z3 on itself by left translation
PartialAction z3_double();          // two disjoint regular copies of Z3
PartialAction sl3_point_action();   // SL3 on one point, all of e,f,g defined
PartialAction i2_natural_action();  // I2 on {1,2}
PartialAction sl3_monoid_ex33();    // ex33 pattern over the monoid fixture
PartialAction z3_onepoint();        // Z3 on one point (whole-group stabilizer)
PartialAction d4_diag_action();     // connected non-strict one-point action

std::vector<std::string> semigroup_names();
std::vector<std::string> action_names();
SemigroupPtr semigroup_by_name(std::string const& name);
PartialAction action_by_name(std::string const& name);

// Raw data of the meet action on the 3-chain, for feeding to
// PartialAction::validate (the fixture itself must be rejected).
std::vector<std::vector<int>> ch3_meet_tables();

}  // namespace invtopos::fixtures

#endif  // INVTOPOS_FIXTURES_HPP_
