#include "pnet/distribution.hpp"

#include <algorithm>
#include <cmath>

namespace pnet {

namespace {

void check_same_domain(const PossibilityDistribution& dist, const Event& a) {
  if (!(dist.domain() == a.domain)) {
    throw ValidationError("event over variable \"" + a.domain.variable_name() +
                          "\" does not match distribution over \"" + dist.domain().variable_name() + "\"");
  }
}

}  // namespace

PossibilityDistribution::PossibilityDistribution(StateDomain domain, std::vector<double> degrees)
    : domain_(std::move(domain)), degrees_(std::move(degrees)) {
  if (static_cast<int>(degrees_.size()) != domain_.size()) {
    throw ValidationError("distribution over \"" + domain_.variable_name() + "\" has " +
                          std::to_string(degrees_.size()) + " degrees for " + std::to_string(domain_.size()) +
                          " states");
  }
  for (double d : degrees_) {
    if (!(d >= 0.0 && d <= 1.0)) {
      throw ValidationError("degree " + std::to_string(d) + " for variable \"" + domain_.variable_name() +
                            "\" is outside [0,1]");
    }
  }
}

double PossibilityDistribution::max_degree() const {
  double m = 0.0;
  for (double d : degrees_) m = std::max(m, d);
  return m;
}

bool PossibilityDistribution::normalized() const { return std::fabs(max_degree() - 1.0) <= kDegreeTolerance; }

double possibility_measure(const PossibilityDistribution& dist, const Event& a) {
  check_same_domain(dist, a);
  double m = 0.0;
  for (int i : a.set.indices()) m = std::max(m, dist.degree(i));
  return m;
}

double necessity_measure(const PossibilityDistribution& dist, const Event& a) {
  check_same_domain(dist, a);
  Event complement{a.domain, a.domain.complement(a.set)};
  return 1.0 - possibility_measure(dist, complement);
}

PossibilityDistribution condition(const PossibilityDistribution& dist, const Event& a, Semantics semantics) {
  check_same_domain(dist, a);
  double pi_a = possibility_measure(dist, a);
  if (pi_a <= 0.0) {
    throw ValidationError("conditioning on impossible evidence (event over \"" + a.domain.variable_name() +
                          "\" has possibility 0)");
  }
  std::vector<double> out(static_cast<std::size_t>(dist.size()), 0.0);
  for (int i : a.set.indices()) {
    double d = dist.degree(i);
    if (semantics == Semantics::kProduct) {
      out[static_cast<std::size_t>(i)] = d / pi_a;
    } else {
      out[static_cast<std::size_t>(i)] = (std::fabs(d - pi_a) <= kDegreeTolerance) ? 1.0 : d;
    }
  }
  return PossibilityDistribution(dist.domain(), std::move(out));
}

Event alpha_cut(const PossibilityDistribution& dist, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("alpha " + std::to_string(alpha) + " is outside [0,1]");
  }
  Event e{dist.domain(), StateSet()};
  for (int i = 0; i < dist.size(); ++i) {
    if (dist.degree(i) >= alpha) e.set.insert(i);
  }
  return e;
}

PossibilityDistribution normalize(const PossibilityDistribution& dist) {
  double m = dist.max_degree();
  if (m <= 0.0) {
    throw ValidationError("degenerate distribution over \"" + dist.domain().variable_name() +
                          "\": all degrees are zero");
  }
  std::vector<double> out(dist.degrees());
  for (double& d : out) d /= m;
  return PossibilityDistribution(dist.domain(), std::move(out));
}

}  // namespace pnet
