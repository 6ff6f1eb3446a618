#ifndef PNET_SAMPLER_HPP
#define PNET_SAMPLER_HPP

#include "pnet/dataset.hpp"
#include "pnet/network.hpp"
#include "pnet/rng.hpp"

namespace pnet {

struct SamplerConfig {
  double theta_imp = 0.0;  // in [0,1]; ignored in precise mode
  SampleMode mode = SampleMode::kImpreciseCut;
  std::uint64_t seed = 0;
  std::uint64_t record_count = 0;
};

// Possibility envelope a conditioned child is instantiated from, given the
// set-valued parent observations of the current record:
//
//   env(x) = max over configurations a in the product of the observed parent
//            sets of  pi(x | a) * w(a)
//
// where w(a) combines (per network semantics) each parent's own envelope
// degree at its state in a. The result is max-normalized. A parentless child
// yields its marginal row unchanged.
//
// observed_parent_sets and parent_envelopes are aligned with the child's
// declared parent order; the envelopes are the ones the parents were
// instantiated from earlier in the same record.
PossibilityDistribution conditional_envelope(const PossibilisticNetwork& net, int child,
                                             const std::vector<StateSet>& observed_parent_sets,
                                             const std::vector<PossibilityDistribution>& parent_envelopes);

// Keeps each non-best member of the cut independently with probability theta;
// the best member always stays. The resulting subset S has probability
// theta^(|S|-1) * (1-theta)^(|cut|-|S|).
StateSet imprecision_blur(const StateSet& cut, int best, double theta, SplitMix64& rng);

// Lowest-index member of the cut with maximal degree.
int most_possible_in(const PossibilityDistribution& dist, const StateSet& cut);

// Draws alpha uniformly and turns the envelope's alpha-cut into an observed
// cell: blurred subset in imprecise mode, uniformly chosen singleton in
// precise mode. The envelope must be normalized.
Event instantiate_variable(const PossibilityDistribution& envelope, const SamplerConfig& config, SplitMix64& rng);

// Forward-samples record_count observations, processing variables in
// topological order. Deterministic given (network, config): record l is
// produced from the substream (seed, l), so the output is independent of any
// scheduling across records.
ImpreciseDataset sample_dataset(const PossibilisticNetwork& net, const SamplerConfig& config);

}  // namespace pnet

#endif  // PNET_SAMPLER_HPP
