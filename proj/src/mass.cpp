#include "pnet/mass.hpp"

#include <cmath>

namespace pnet {

MassFunction::MassFunction(StateDomain domain, std::map<StateSet, double> assignments)
    : domain_(std::move(domain)), assignments_(std::move(assignments)) {
  double total = 0.0;
  StateSet full = StateSet::full(domain_.size());
  for (const auto& [focal, mass] : assignments_) {
    if (focal.empty()) {
      throw ValidationError("mass function over \"" + domain_.variable_name() + "\" assigns mass to the empty set");
    }
    if (!focal.is_subset_of(full)) {
      throw ValidationError("focal set outside the domain of \"" + domain_.variable_name() + "\"");
    }
    if (!(mass > 0.0 && mass <= 1.0)) {
      throw ValidationError("focal mass " + std::to_string(mass) + " for \"" + domain_.variable_name() +
                            "\" is outside (0,1]");
    }
    total += mass;
  }
  if (std::fabs(total - 1.0) > kDegreeTolerance) {
    throw ValidationError("masses for \"" + domain_.variable_name() + "\" sum to " + std::to_string(total) +
                          ", expected 1");
  }
}

double MassFunction::mass(const StateSet& focal) const {
  auto it = assignments_.find(focal);
  return it == assignments_.end() ? 0.0 : it->second;
}

PossibilityDistribution mass_to_possibility(const MassFunction& m) {
  std::vector<double> degrees(static_cast<std::size_t>(m.domain().size()), 0.0);
  for (const auto& [focal, mass] : m.assignments()) {
    for (int i : focal.indices()) degrees[static_cast<std::size_t>(i)] += mass;
  }
  // Rounding in the sums may nudge a degree a hair above 1.
  for (double& d : degrees) d = std::min(d, 1.0);
  return PossibilityDistribution(m.domain(), std::move(degrees));
}

bool is_consistent(const MassFunction& m) {
  if (m.assignments().empty()) return true;
  StateSet common = StateSet::full(m.domain().size());
  for (const auto& [focal, mass] : m.assignments()) {
    (void)mass;
    common = common.intersect(focal);
  }
  return !common.empty();
}

}  // namespace pnet
