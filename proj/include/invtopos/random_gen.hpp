#ifndef INVTOPOS_RANDOM_GEN_HPP_
#define INVTOPOS_RANDOM_GEN_HPP_

#include <random>

#include "invtopos/actions.hpp"

namespace invtopos {

struct RandomConfig {
  int max_semigroup = 6;
  int max_carrier = 5;
  int degree = 3;
  int max_generators = 2;
  double keep_probability = 0.7;  // chance a defined pair survives restriction
  double strict_probability = 0.3;
};

// A random inverse semigroup realized by partial bijections, of size at
// most max_semigroup.
PartialBijectionSemigroup random_inverse_semigroup(std::mt19937_64& rng,
                                                   RandomConfig const& cfg);

// A random valid non-strict effective action: the natural action of a
// random semigroup with domains randomly restricted, then repaired until
// the prehomomorphism law and effectiveness hold again.
PartialAction random_action(std::mt19937_64& rng, RandomConfig const& cfg);

// The same restrict-and-repair pass applied to a given action. Returns
// nothing when every carrier point dies.
std::optional<PartialAction> random_restriction(std::mt19937_64& rng,
                                                PartialAction const& base,
                                                double keep_probability);

}  // namespace invtopos

#endif  // INVTOPOS_RANDOM_GEN_HPP_
