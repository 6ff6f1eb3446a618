#include "pnet/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pnet {

namespace {

constexpr double kNegativeInfinity = -std::numeric_limits<double>::infinity();

void check_budget(const ImprecisionBudget& budget, const PossibilisticNetwork& structure) {
  if (budget.per_variable.size() != static_cast<std::size_t>(structure.variable_count())) {
    throw ValidationError("budget covers " + std::to_string(budget.per_variable.size()) + " of " +
                          std::to_string(structure.variable_count()) + " variables");
  }
  for (std::size_t i = 0; i < budget.per_variable.size(); ++i) {
    if (!(budget.per_variable[i] > 0.0)) {
      throw ValidationError("imprecision budget for \"" + structure.variable(static_cast<int>(i)).variable_name() +
                            "\" must be positive");
    }
  }
}

void check_rows_shape(const std::vector<std::vector<std::vector<double>>>& rows,
                      const PossibilisticNetwork& structure) {
  if (rows.size() != static_cast<std::size_t>(structure.variable_count())) {
    throw ValidationError("parameter rows cover " + std::to_string(rows.size()) + " of " +
                          std::to_string(structure.variable_count()) + " variables");
  }
  for (int i = 0; i < structure.variable_count(); ++i) {
    const auto& var_rows = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(var_rows.size()) != structure.parent_configuration_count(i)) {
      throw ValidationError("parameter rows for \"" + structure.variable(i).variable_name() +
                            "\" have the wrong configuration count");
    }
    for (const auto& row : var_rows) {
      if (static_cast<int>(row.size()) != structure.variable(i).size()) {
        throw ValidationError("parameter row for \"" + structure.variable(i).variable_name() +
                              "\" has the wrong state count");
      }
    }
  }
}

CountTensor make_tensor(const PossibilisticNetwork& structure, CountTensor::Mode mode) {
  CountTensor tensor;
  tensor.mode = mode;
  tensor.schema = structure.variables();
  tensor.cells.resize(static_cast<std::size_t>(structure.variable_count()));
  for (int i = 0; i < structure.variable_count(); ++i) {
    auto& var_cells = tensor.cells[static_cast<std::size_t>(i)];
    var_cells.resize(static_cast<std::size_t>(structure.parent_configuration_count(i)));
    if (mode == CountTensor::Mode::kPossibilistic) {
      for (auto& cell : var_cells) {
        cell.state_counts.assign(static_cast<std::size_t>(structure.variable(i).size()), 0);
      }
    }
  }
  return tensor;
}

// Invokes fn(configuration) for every parent configuration whose states all
// belong to the record's parent cells.
template <typename Fn>
void for_each_matching_configuration(const PossibilisticNetwork& structure, int variable,
                                     const ImpreciseObservation& record, Fn&& fn) {
  const auto& parents = structure.table(variable).parents;
  if (parents.empty()) {
    fn(0);
    return;
  }
  std::vector<std::vector<int>> choices(parents.size());
  for (std::size_t p = 0; p < parents.size(); ++p) {
    choices[p] = record[static_cast<std::size_t>(parents[p])].indices();
  }
  std::vector<std::size_t> pick(parents.size(), 0);
  std::vector<int> states(parents.size(), 0);
  for (;;) {
    for (std::size_t p = 0; p < parents.size(); ++p) states[p] = choices[p][pick[p]];
    fn(structure.encode_parent_configuration(variable, states));
    std::size_t p = parents.size();
    while (p-- > 0) {
      if (++pick[p] < choices[p].size()) break;
      pick[p] = 0;
      if (p == 0) return;
    }
  }
}

CountTensor count(const ImpreciseDataset& data, const PossibilisticNetwork& structure, CountTensor::Mode mode) {
  check_schema_match(data, structure.variables());
  CountTensor tensor = make_tensor(structure, mode);
  for (const ImpreciseObservation& record : data.records()) {
    for (int i = 0; i < structure.variable_count(); ++i) {
      const StateSet& cell_value = record[static_cast<std::size_t>(i)];
      for_each_matching_configuration(structure, i, record, [&](int j) {
        CountCell& cell = tensor.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        ++cell.record_total;
        if (mode == CountTensor::Mode::kPossibilistic) {
          for (int k : cell_value.indices()) ++cell.state_counts[static_cast<std::size_t>(k)];
        } else {
          ++cell.focal_counts[cell_value];
        }
      });
    }
  }
  return tensor;
}

}  // namespace

ImprecisionBudget ImprecisionBudget::uniform(std::size_t variable_count, double value) {
  if (!(value > 0.0)) {
    throw ValidationError("imprecision budget must be positive, got " + std::to_string(value));
  }
  return ImprecisionBudget{std::vector<double>(variable_count, value)};
}

ImprecisionBudget ImprecisionBudget::mean_cardinality(const ImpreciseDataset& data) {
  std::size_t n = data.schema().size();
  std::vector<double> s(n, 1.0);
  if (data.record_count() == 0) return ImprecisionBudget{std::move(s)};
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t total = 0;
    for (const auto& record : data.records()) total += static_cast<std::uint64_t>(record[i].count());
    s[i] = static_cast<double>(total) / static_cast<double>(data.record_count());
  }
  return ImprecisionBudget{std::move(s)};
}

CountTensor count_possibilistic(const ImpreciseDataset& data, const PossibilisticNetwork& structure) {
  return count(data, structure, CountTensor::Mode::kPossibilistic);
}

CountTensor count_random_set(const ImpreciseDataset& data, const PossibilisticNetwork& structure) {
  return count(data, structure, CountTensor::Mode::kRandomSet);
}

HistogramEstimate histogram_estimate(const CountTensor& counts) {
  if (counts.mode != CountTensor::Mode::kPossibilistic) {
    throw ValidationError("histogram estimation needs possibilistic counts");
  }
  HistogramEstimate est;
  est.rows.resize(counts.cells.size());
  est.seen.resize(counts.cells.size());
  for (std::size_t i = 0; i < counts.cells.size(); ++i) {
    for (const CountCell& cell : counts.cells[i]) {
      std::vector<double> row(cell.state_counts.size(), 0.0);
      if (cell.record_total > 0) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          row[k] = static_cast<double>(cell.state_counts[k]) / static_cast<double>(cell.record_total);
        }
      }
      est.rows[i].push_back(std::move(row));
      est.seen[i].push_back(cell.record_total > 0);
    }
  }
  return est;
}

RandomSetEstimate random_set_mle(const CountTensor& counts) {
  if (counts.mode != CountTensor::Mode::kRandomSet) {
    throw ValidationError("random-set estimation needs random-set counts");
  }
  RandomSetEstimate est;
  est.cells.resize(counts.cells.size());
  est.seen.resize(counts.cells.size());
  for (std::size_t i = 0; i < counts.cells.size(); ++i) {
    const StateDomain& domain = counts.schema[i];
    for (const CountCell& cell : counts.cells[i]) {
      if (cell.record_total == 0) {
        est.cells[i].emplace_back();  // unseen: no assignments
        est.seen[i].push_back(false);
        continue;
      }
      std::uint64_t total = 0;
      for (const auto& [focal, n] : cell.focal_counts) {
        (void)focal;
        total += n;
      }
      std::map<StateSet, double> masses;
      for (const auto& [focal, n] : cell.focal_counts) {
        masses[focal] = static_cast<double>(n) / static_cast<double>(total);
      }
      est.cells[i].emplace_back(MassFunction(domain, std::move(masses)));
      est.seen[i].push_back(true);
    }
  }
  return est;
}

double random_set_loglik(const std::vector<std::vector<MassFunction>>& m, const PossibilisticNetwork& structure,
                         const ImpreciseDataset& data) {
  CountTensor counts = count_random_set(data, structure);
  if (m.size() != counts.cells.size()) {
    throw ValidationError("mass tables cover " + std::to_string(m.size()) + " of " +
                          std::to_string(counts.cells.size()) + " variables");
  }
  double ll = 0.0;
  for (std::size_t i = 0; i < counts.cells.size(); ++i) {
    if (m[i].size() != counts.cells[i].size()) {
      throw ValidationError("mass tables for \"" + structure.variable(static_cast<int>(i)).variable_name() +
                            "\" have the wrong configuration count");
    }
    for (std::size_t j = 0; j < counts.cells[i].size(); ++j) {
      for (const auto& [focal, n] : counts.cells[i][j].focal_counts) {
        double mass = m[i][j].mass(focal);
        if (mass <= 0.0) return kNegativeInfinity;
        ll += static_cast<double>(n) * std::log(mass);
      }
    }
  }
  return ll;
}

double possibilistic_loglik(const std::vector<std::vector<std::vector<double>>>& pi_rows,
                            const PossibilisticNetwork& structure, const ImpreciseDataset& data) {
  check_rows_shape(pi_rows, structure);
  CountTensor counts = count_possibilistic(data, structure);
  double ll = 0.0;
  for (std::size_t i = 0; i < counts.cells.size(); ++i) {
    for (std::size_t j = 0; j < counts.cells[i].size(); ++j) {
      const CountCell& cell = counts.cells[i][j];
      for (std::size_t k = 0; k < cell.state_counts.size(); ++k) {
        std::uint64_t n = cell.state_counts[k];
        if (n == 0) continue;
        double pi = pi_rows[i][j][k];
        if (pi <= 0.0) return kNegativeInfinity;
        ll += static_cast<double>(n) * std::log(pi);
      }
    }
  }
  return ll;
}

double possibilistic_loglik(const PossibilisticNetwork& net, const ImpreciseDataset& data) {
  std::vector<std::vector<std::vector<double>>> rows;
  rows.reserve(static_cast<std::size_t>(net.variable_count()));
  for (int i = 0; i < net.variable_count(); ++i) rows.push_back(net.table(i).rows);
  return possibilistic_loglik(rows, net, data);
}

PossibilisticMleResult possibilistic_mle(const CountTensor& counts, const ImprecisionBudget& budget) {
  if (counts.mode != CountTensor::Mode::kPossibilistic) {
    throw ValidationError("possibilistic MLE needs possibilistic counts");
  }
  if (budget.per_variable.size() != counts.cells.size()) {
    throw ValidationError("budget covers " + std::to_string(budget.per_variable.size()) + " of " +
                          std::to_string(counts.cells.size()) + " variables");
  }
  PossibilisticMleResult result;
  result.raw.resize(counts.cells.size());
  result.normalized.resize(counts.cells.size());
  for (std::size_t i = 0; i < counts.cells.size(); ++i) {
    double s = budget.per_variable[i];
    if (!(s > 0.0)) throw ValidationError("imprecision budget must be positive");
    for (const CountCell& cell : counts.cells[i]) {
      std::vector<double> effective(cell.state_counts.begin(), cell.state_counts.end());
      double total = 0.0;
      for (double c : effective) total += c;
      if (total == 0.0) {
        // Zero everywhere: add an initial count of 1 to every state.
        std::fill(effective.begin(), effective.end(), 1.0);
        total = static_cast<double>(effective.size());
      }
      std::vector<double> raw(effective.size(), 0.0);
      double max_raw = 0.0;
      for (std::size_t k = 0; k < effective.size(); ++k) {
        raw[k] = effective[k] / total * s;
        max_raw = std::max(max_raw, raw[k]);
      }
      std::vector<double> norm(raw);
      for (double& d : norm) d /= max_raw;
      result.raw[i].push_back(std::move(raw));
      result.normalized[i].push_back(std::move(norm));
    }
  }
  return result;
}

LearnedParameters learn_parameters(const ImpreciseDataset& data, const PossibilisticNetwork& structure,
                                   const ImprecisionBudget& budget, EstimatorKind estimator, Semantics semantics) {
  check_schema_match(data, structure.variables());
  check_budget(budget, structure);

  LearnedParameters out;
  std::vector<std::vector<std::vector<double>>> normalized;

  switch (estimator) {
    case EstimatorKind::kPossibilisticMle: {
      PossibilisticMleResult mle = possibilistic_mle(count_possibilistic(data, structure), budget);
      out.raw_rows = std::move(mle.raw);
      normalized = std::move(mle.normalized);
      break;
    }
    case EstimatorKind::kHistogram: {
      HistogramEstimate est = histogram_estimate(count_possibilistic(data, structure));
      out.raw_rows = est.rows;
      normalized = std::move(est.rows);
      for (std::size_t i = 0; i < normalized.size(); ++i) {
        for (std::size_t j = 0; j < normalized[i].size(); ++j) {
          auto& row = normalized[i][j];
          if (!est.seen[i][j]) {
            // Unseen configuration: total ignorance.
            std::fill(row.begin(), row.end(), 1.0);
            out.raw_rows[i][j] = row;
            continue;
          }
          double m = *std::max_element(row.begin(), row.end());
          for (double& d : row) d /= m;
        }
      }
      break;
    }
    case EstimatorKind::kRandomSet: {
      RandomSetEstimate est = random_set_mle(count_random_set(data, structure));
      std::vector<std::vector<MassFunction>> tables(est.cells.size());
      out.raw_rows.resize(est.cells.size());
      normalized.resize(est.cells.size());
      for (std::size_t i = 0; i < est.cells.size(); ++i) {
        const StateDomain& domain = structure.variable(static_cast<int>(i));
        for (std::size_t j = 0; j < est.cells[i].size(); ++j) {
          // Unseen configuration: vacuous mass on the full domain, whose
          // counter function is total ignorance.
          MassFunction m = est.seen[i][j]
                               ? std::move(est.cells[i][j])
                               : MassFunction(domain, std::map<StateSet, double>{{StateSet::full(domain.size()), 1.0}});
          std::vector<double> counter = mass_to_possibility(m).degrees();
          out.raw_rows[i].push_back(counter);
          double mx = *std::max_element(counter.begin(), counter.end());
          for (double& d : counter) d /= mx;
          normalized[i].push_back(std::move(counter));
          tables[i].push_back(std::move(m));
        }
      }
      out.mass_tables = std::move(tables);
      break;
    }
  }

  out.network = structure.with_tables(std::move(normalized), semantics);
  return out;
}

}  // namespace pnet
