#ifndef PNET_MASS_HPP
#define PNET_MASS_HPP

#include <map>

#include "pnet/distribution.hpp"

namespace pnet {

// A random set over a finite domain: probability masses on nonempty focal
// subsets, summing to 1. Assignments are keyed by the canonical bitset
// encoding so iteration order is deterministic.
class MassFunction {
 public:
  MassFunction() = default;
  MassFunction(StateDomain domain, std::map<StateSet, double> assignments);

  const StateDomain& domain() const { return domain_; }
  const std::map<StateSet, double>& assignments() const { return assignments_; }
  double mass(const StateSet& focal) const;

 private:
  StateDomain domain_;
  std::map<StateSet, double> assignments_;
};

// Counter function of the random set: pi(x) = sum of masses of the focal sets
// containing x. Normalized exactly when the random set is consistent.
PossibilityDistribution mass_to_possibility(const MassFunction& m);

// True iff the intersection of all focal sets is nonempty.
bool is_consistent(const MassFunction& m);

}  // namespace pnet

#endif  // PNET_MASS_HPP
