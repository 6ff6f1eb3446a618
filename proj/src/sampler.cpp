#include "pnet/sampler.hpp"

#include <algorithm>

namespace pnet {

namespace {

void check_config(const SamplerConfig& config) {
  if (!(config.theta_imp >= 0.0 && config.theta_imp <= 1.0)) {
    throw ValidationError("theta_imp " + std::to_string(config.theta_imp) + " is outside [0,1]");
  }
  if (config.record_count == 0) throw ValidationError("record_count must be at least 1");
}

}  // namespace

PossibilityDistribution conditional_envelope(const PossibilisticNetwork& net, int child,
                                             const std::vector<StateSet>& observed_parent_sets,
                                             const std::vector<PossibilityDistribution>& parent_envelopes) {
  const auto& parents = net.table(child).parents;
  if (parents.empty()) {
    return net.row_distribution(child, 0);
  }
  if (observed_parent_sets.size() != parents.size() || parent_envelopes.size() != parents.size()) {
    throw ValidationError("variable \"" + net.variable(child).variable_name() +
                          "\" instantiated before all of its parents");
  }

  std::vector<std::vector<int>> choices(parents.size());
  for (std::size_t p = 0; p < parents.size(); ++p) {
    if (observed_parent_sets[p].empty()) {
      throw ValidationError("empty observed set for parent \"" + net.variable(parents[p]).variable_name() + "\"");
    }
    choices[p] = observed_parent_sets[p].indices();
  }

  const StateDomain& domain = net.variable(child);
  std::vector<double> env(static_cast<std::size_t>(domain.size()), 0.0);

  // Walk the Cartesian product of the observed parent sets.
  std::vector<std::size_t> pick(parents.size(), 0);
  std::vector<int> config_states(parents.size(), 0);
  for (;;) {
    double weight = 1.0;
    for (std::size_t p = 0; p < parents.size(); ++p) {
      int state = choices[p][pick[p]];
      config_states[p] = state;
      weight = combine(net.semantics(), weight, parent_envelopes[p].degree(state));
    }
    const auto& row = net.row(child, net.encode_parent_configuration(child, config_states));
    for (int x = 0; x < domain.size(); ++x) {
      env[static_cast<std::size_t>(x)] = std::max(env[static_cast<std::size_t>(x)],
                                                  row[static_cast<std::size_t>(x)] * weight);
    }

    std::size_t p = parents.size();
    while (p-- > 0) {
      if (++pick[p] < choices[p].size()) break;
      pick[p] = 0;
      if (p == 0) return normalize(PossibilityDistribution(domain, std::move(env)));
    }
  }
}

StateSet imprecision_blur(const StateSet& cut, int best, double theta, SplitMix64& rng) {
  if (!cut.contains(best)) {
    throw ValidationError("blur anchor state " + std::to_string(best) + " is not a member of the cut");
  }
  StateSet out = StateSet::singleton(best);
  for (int i : cut.indices()) {
    if (i == best) continue;
    if (rng.next_unit() < theta) out.insert(i);
  }
  return out;
}

int most_possible_in(const PossibilityDistribution& dist, const StateSet& cut) {
  int best = -1;
  double best_degree = -1.0;
  for (int i : cut.indices()) {
    if (dist.degree(i) > best_degree) {
      best = i;
      best_degree = dist.degree(i);
    }
  }
  if (best < 0) throw ValidationError("cannot pick the most possible state of an empty cut");
  return best;
}

Event instantiate_variable(const PossibilityDistribution& envelope, const SamplerConfig& config, SplitMix64& rng) {
  check_config(config);
  if (!envelope.normalized()) {
    throw ValidationError("instantiation envelope for \"" + envelope.domain().variable_name() +
                          "\" is not normalized");
  }
  // alpha in (0,1]: a state enters the cut with probability exactly equal to
  // its degree, and zero-degree states never do.
  double alpha = 1.0 - rng.next_unit();
  Event cut = alpha_cut(envelope, alpha);
  if (config.mode == SampleMode::kPreciseUniform) {
    auto members = cut.set.indices();
    int chosen = members[rng.next_below(members.size())];
    return Event{envelope.domain(), StateSet::singleton(chosen)};
  }
  int best = most_possible_in(envelope, cut.set);
  return Event{envelope.domain(), imprecision_blur(cut.set, best, config.theta_imp, rng)};
}

ImpreciseDataset sample_dataset(const PossibilisticNetwork& net, const SamplerConfig& config) {
  check_config(config);
  std::vector<int> order = topological_order(net);
  std::size_t n = static_cast<std::size_t>(net.variable_count());

  // Marginal rows of parentless variables, normalized once up front.
  std::vector<PossibilityDistribution> root_envelope(n);
  for (int v : order) {
    if (net.table(v).parents.empty()) {
      root_envelope[static_cast<std::size_t>(v)] = normalize(net.row_distribution(v, 0));
    }
  }

  std::vector<ImpreciseObservation> records;
  records.reserve(config.record_count);
  std::vector<PossibilityDistribution> envelopes(n);
  std::vector<StateSet> cells(n);
  std::vector<StateSet> observed_parents;
  std::vector<PossibilityDistribution> parent_envelopes;

  for (std::uint64_t l = 0; l < config.record_count; ++l) {
    SplitMix64 rng = SplitMix64::substream(config.seed, l);
    for (int v : order) {
      const auto& parents = net.table(v).parents;
      if (parents.empty()) {
        envelopes[static_cast<std::size_t>(v)] = root_envelope[static_cast<std::size_t>(v)];
      } else {
        observed_parents.clear();
        parent_envelopes.clear();
        for (int p : parents) {
          observed_parents.push_back(cells[static_cast<std::size_t>(p)]);
          parent_envelopes.push_back(envelopes[static_cast<std::size_t>(p)]);
        }
        envelopes[static_cast<std::size_t>(v)] = conditional_envelope(net, v, observed_parents, parent_envelopes);
      }
      cells[static_cast<std::size_t>(v)] =
          instantiate_variable(envelopes[static_cast<std::size_t>(v)], config, rng).set;
    }
    records.push_back(cells);
  }

  DatasetMetadata meta;
  meta.seed = config.seed;
  meta.theta_imp = config.theta_imp;
  meta.mode = config.mode;
  meta.has_sampler_info = true;
  return ImpreciseDataset(net.variables(), std::move(records), meta);
}

}  // namespace pnet
