#ifndef PNET_ESTIMATOR_HPP
#define PNET_ESTIMATOR_HPP

#include <map>
#include <optional>

#include "pnet/dataset.hpp"
#include "pnet/mass.hpp"
#include "pnet/network.hpp"

namespace pnet {

// Occurrence counts for one (variable, parent configuration) cell.
// Possibilistic counting fills state_counts: a record increments every state
// contained in its cell, so the column sum can exceed the number of matched
// records. Random-set counting fills focal_counts by exact set equality, so
// its total always equals record_total.
struct CountCell {
  std::vector<std::uint64_t> state_counts;         // N_ijk per child state
  std::map<StateSet, std::uint64_t> focal_counts;  // N_ijk per observed focal set
  std::uint64_t record_total = 0;                  // N_ij: records matching this parent configuration
};

struct CountTensor {
  enum class Mode { kPossibilistic, kRandomSet };
  Mode mode = Mode::kPossibilistic;
  std::vector<StateDomain> schema;            // one domain per counted variable
  std::vector<std::vector<CountCell>> cells;  // [variable][parent configuration]
};

// Per-variable sum S_i that the raw estimate of each row is scaled to.
// Max-normalization cancels it, so it only shows in raw (pre-normalization)
// parameters.
struct ImprecisionBudget {
  std::vector<double> per_variable;

  static ImprecisionBudget uniform(std::size_t variable_count, double value = 1.0);
  // S_i = mean observed cell cardinality of X_i; 1 on an empty dataset.
  static ImprecisionBudget mean_cardinality(const ImpreciseDataset& data);
};

// Membership counting: a record counts toward state k of cell (i,j) when
// state k belongs to its cell for X_i and every parent's state in
// configuration j belongs to the record's cell for that parent. One record
// can therefore feed several configurations.
CountTensor count_possibilistic(const ImpreciseDataset& data, const PossibilisticNetwork& structure);

// Exact-match counting over focal subsets, with the same membership rule on
// the parents. Only observed subsets get entries.
CountTensor count_random_set(const ImpreciseDataset& data, const PossibilisticNetwork& structure);

// Per-cell estimate with a seen/unseen marker (unseen = no record matched the
// parent configuration; the consumer decides how to smooth those).
struct HistogramEstimate {
  std::vector<std::vector<std::vector<double>>> rows;  // [variable][configuration][state]
  std::vector<std::vector<bool>> seen;
};

// Sub-normalized histogram rows N_ijk / N_ij from possibilistic counts.
HistogramEstimate histogram_estimate(const CountTensor& counts);

struct RandomSetEstimate {
  std::vector<std::vector<MassFunction>> cells;  // [variable][configuration]; vacuous when unseen
  std::vector<std::vector<bool>> seen;
};

// Closed-form maximizer of the random-set log-likelihood:
// m_ijk = N_ijk / sum_k N_ijk over the observed focal sets.
RandomSetEstimate random_set_mle(const CountTensor& counts);

// sum over (i,j,k) of N_ijk * log m_ijk with random-set counts. Returns
// -infinity when some observed focal set has zero mass.
double random_set_loglik(const std::vector<std::vector<MassFunction>>& m, const PossibilisticNetwork& structure,
                         const ImpreciseDataset& data);

// sum over (i,j,k) of N_ijk * log pi_ijk with membership counts. Accepts any
// degree rows (raw or normalized); -infinity when a counted state has
// degree 0.
double possibilistic_loglik(const std::vector<std::vector<std::vector<double>>>& pi_rows,
                            const PossibilisticNetwork& structure, const ImpreciseDataset& data);

// Same score with the network's own tables as the parameters.
double possibilistic_loglik(const PossibilisticNetwork& net, const ImpreciseDataset& data);

struct PossibilisticMleResult {
  std::vector<std::vector<std::vector<double>>> raw;         // rows summing to S_i (after smoothing)
  std::vector<std::vector<std::vector<double>>> normalized;  // raw rows divided by their maximum
};

// Closed-form maximizer of the possibilistic likelihood under the row-sum
// constraint: raw pi_ijk = N_ijk / sum_k N_ijk * S_i, with add-one smoothing
// of cells whose total count is zero, then max-normalization per row.
PossibilisticMleResult possibilistic_mle(const CountTensor& counts, const ImprecisionBudget& budget);

enum class EstimatorKind { kPossibilisticMle, kHistogram, kRandomSet };

struct LearnedParameters {
  // Network over the given structure with every row filled. For the
  // random-set estimator the rows are the counter functions of the learned
  // mass functions (normalized like the others).
  PossibilisticNetwork network;
  // Pre-normalization rows: the Proposition's raw estimates for the
  // possibilistic MLE, sub-normalized histogram rows for the histogram
  // estimator, counter-function rows for the random-set estimator.
  std::vector<std::vector<std::vector<double>>> raw_rows;
  // Present only for the random-set estimator.
  std::optional<std::vector<std::vector<MassFunction>>> mass_tables;
};

LearnedParameters learn_parameters(const ImpreciseDataset& data, const PossibilisticNetwork& structure,
                                   const ImprecisionBudget& budget, EstimatorKind estimator,
                                   Semantics semantics = Semantics::kProduct);

}  // namespace pnet

#endif  // PNET_ESTIMATOR_HPP
