#ifndef PNET_EVALUATION_HPP
#define PNET_EVALUATION_HPP

#include <map>
#include <optional>
#include <string>

#include "pnet/estimator.hpp"
#include "pnet/sampler.hpp"

namespace pnet {

// How the imprecision budget of a learning run is chosen.
struct BudgetSpec {
  enum class Kind { kDefault, kMeanCardinality, kExplicit };
  Kind kind = Kind::kDefault;
  std::map<std::string, double> per_variable;  // kExplicit only

  ImprecisionBudget resolve(const PossibilisticNetwork& structure, const ImpreciseDataset& data) const;
  std::string describe() const;
};

struct ExperimentConfig {
  PossibilisticNetwork gold;
  SamplerConfig sampler;
  EstimatorKind estimator = EstimatorKind::kPossibilisticMle;
  BudgetSpec budget;
  double holdout_fraction = 0.0;  // in [0,1)
  std::uint64_t omega_cap = 0;    // 0 means default_omega_cap()
};

struct EvaluationReport {
  std::map<std::string, double> cpt_distance;  // per variable
  double cpt_distance_mean = 0.0;
  std::optional<double> joint_distance;  // absent when |Omega| exceeds the cap
  std::string joint_distance_note;       // reason when absent
  std::uint64_t train_records = 0;
  std::uint64_t holdout_records = 0;
  // Possibilistic log-likelihood of the holdout split; -infinity is legal.
  double holdout_pll_gold = 0.0;
  double holdout_pll_learned = 0.0;
  double holdout_pll_learned_raw = 0.0;
  // Echo of the generating configuration.
  SamplerConfig sampler;
  EstimatorKind estimator = EstimatorKind::kPossibilisticMle;
  std::string budget_description;
  double holdout_fraction = 0.0;
  std::uint64_t omega_cap = 0;
};

// Mean absolute difference of degrees over all (parent configuration, state)
// pairs, per variable. Variables, parents, and states are aligned by label,
// so a reordered-but-equal network compares at distance zero. Both networks
// are max-normalized row by row before comparison.
std::map<std::string, double> cpt_distance(const PossibilisticNetwork& gold, const PossibilisticNetwork& learned);

// Mean absolute difference of chain-rule joint degrees over all of Omega.
// Requires matching semantics tags and |Omega| within the cap.
double joint_distance(const PossibilisticNetwork& gold, const PossibilisticNetwork& learned, std::uint64_t cap);
double joint_distance(const PossibilisticNetwork& gold, const PossibilisticNetwork& learned);

// Sample from the gold network, learn on the training split with the gold
// structure, and report distances plus holdout fit. Reproducible from the
// seed.
EvaluationReport run_experiment(const ExperimentConfig& config);

}  // namespace pnet

#endif  // PNET_EVALUATION_HPP
