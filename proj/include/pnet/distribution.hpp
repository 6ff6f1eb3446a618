#ifndef PNET_DISTRIBUTION_HPP
#define PNET_DISTRIBUTION_HPP

#include <vector>

#include "pnet/domain.hpp"

namespace pnet {

// Semantics of a possibilistic network, i.e. the combination operator of the
// chain rule and the conditioning rule it descends from.
enum class Semantics { kMin, kProduct };

// A possibility distribution over a finite domain: one degree in [0,1] per
// state. Normalization (max degree 1) is a property, not an enforced
// invariant; sub-normalized distributions are legal and arise naturally from
// counting-based estimation.
class PossibilityDistribution {
 public:
  PossibilityDistribution() = default;
  PossibilityDistribution(StateDomain domain, std::vector<double> degrees);

  const StateDomain& domain() const { return domain_; }
  const std::vector<double>& degrees() const { return degrees_; }
  double degree(int index) const { return degrees_[static_cast<std::size_t>(index)]; }
  int size() const { return static_cast<int>(degrees_.size()); }

  double max_degree() const;
  // Max degree equal to 1 within the global tolerance.
  bool normalized() const;

 private:
  StateDomain domain_;
  std::vector<double> degrees_;
};

// Pi(A): max degree over the members of the event; 0 for the empty event.
double possibility_measure(const PossibilityDistribution& dist, const Event& a);

// N(A) = 1 - Pi(complement of A).
double necessity_measure(const PossibilityDistribution& dist, const Event& a);

// Revision of the distribution by certain evidence A. Product semantics
// rescales inside A by Pi(A); min semantics raises the plateau at Pi(A) to 1
// and keeps lower degrees as they are. Both zero out states outside A and
// yield a normalized result. Pi(A) = 0 is an error.
PossibilityDistribution condition(const PossibilityDistribution& dist, const Event& a, Semantics semantics);

// States with degree >= alpha. alpha must lie in [0,1]. On a normalized
// distribution the result is nonempty and contains every degree-1 state.
Event alpha_cut(const PossibilityDistribution& dist, double alpha);

// Divides every degree by the maximum. All-zero distributions are degenerate
// and rejected; see the estimator's smoothing rule for how callers avoid them.
PossibilityDistribution normalize(const PossibilityDistribution& dist);

}  // namespace pnet

#endif  // PNET_DISTRIBUTION_HPP
