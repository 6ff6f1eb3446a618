#include "pnet/evaluation.hpp"

#include <algorithm>
#include <cmath>

namespace pnet {

namespace {

// Label-level correspondence from gold to learned: variable index map and,
// per variable, state index map.
struct Alignment {
  std::vector<int> variable;                 // gold variable index -> learned variable index
  std::vector<std::vector<int>> state;       // [gold variable][gold state] -> learned state
};

Alignment align_domains(const PossibilisticNetwork& gold, const PossibilisticNetwork& learned) {
  if (gold.variable_count() != learned.variable_count()) {
    throw ValidationError("networks differ in variable count (" + std::to_string(gold.variable_count()) + " vs " +
                          std::to_string(learned.variable_count()) + ")");
  }
  Alignment a;
  a.variable.resize(static_cast<std::size_t>(gold.variable_count()));
  a.state.resize(static_cast<std::size_t>(gold.variable_count()));
  for (int i = 0; i < gold.variable_count(); ++i) {
    const StateDomain& gv = gold.variable(i);
    int li = learned.variable_index(gv.variable_name());
    if (li < 0) {
      throw ValidationError("variable \"" + gv.variable_name() + "\" missing from the second network");
    }
    const StateDomain& lv = learned.variable(li);
    if (gv.size() != lv.size()) {
      throw ValidationError("variable \"" + gv.variable_name() + "\" has different cardinalities");
    }
    a.variable[static_cast<std::size_t>(i)] = li;
    auto& states = a.state[static_cast<std::size_t>(i)];
    states.resize(static_cast<std::size_t>(gv.size()));
    for (int k = 0; k < gv.size(); ++k) {
      int lk = lv.index_of(gv.label(k));
      if (lk < 0) {
        throw ValidationError("state \"" + gv.label(k) + "\" of \"" + gv.variable_name() +
                              "\" missing from the second network");
      }
      states[static_cast<std::size_t>(k)] = lk;
    }
  }
  return a;
}

void check_same_edges(const PossibilisticNetwork& gold, const PossibilisticNetwork& learned) {
  auto key = [](const PossibilisticNetwork& net) {
    std::vector<std::pair<std::string, std::string>> edges = net.edges();
    std::sort(edges.begin(), edges.end());
    return edges;
  };
  if (key(gold) != key(learned)) {
    throw ValidationError("networks have different edge sets");
  }
}

std::vector<double> max_normalized(const std::vector<double>& row, const std::string& variable) {
  double m = *std::max_element(row.begin(), row.end());
  if (m <= 0.0) {
    throw ValidationError("degenerate all-zero table row for \"" + variable + "\"");
  }
  std::vector<double> out(row);
  for (double& d : out) d /= m;
  return out;
}

}  // namespace

ImprecisionBudget BudgetSpec::resolve(const PossibilisticNetwork& structure, const ImpreciseDataset& data) const {
  switch (kind) {
    case Kind::kDefault:
      return ImprecisionBudget::uniform(static_cast<std::size_t>(structure.variable_count()));
    case Kind::kMeanCardinality:
      return ImprecisionBudget::mean_cardinality(data);
    case Kind::kExplicit: {
      ImprecisionBudget budget =
          ImprecisionBudget::uniform(static_cast<std::size_t>(structure.variable_count()));
      for (const auto& [name, value] : per_variable) {
        int i = structure.variable_index(name);
        if (i < 0) throw ValidationError("budget names unknown variable \"" + name + "\"");
        if (!(value > 0.0)) {
          throw ValidationError("budget for \"" + name + "\" must be positive, got " + std::to_string(value));
        }
        budget.per_variable[static_cast<std::size_t>(i)] = value;
      }
      return budget;
    }
  }
  throw ValidationError("unknown budget kind");
}

std::string BudgetSpec::describe() const {
  switch (kind) {
    case Kind::kDefault:
      return "default";
    case Kind::kMeanCardinality:
      return "mean-card";
    case Kind::kExplicit:
      return "explicit";
  }
  return "unknown";
}

std::map<std::string, double> cpt_distance(const PossibilisticNetwork& gold, const PossibilisticNetwork& learned) {
  Alignment a = align_domains(gold, learned);
  check_same_edges(gold, learned);

  std::map<std::string, double> out;
  for (int i = 0; i < gold.variable_count(); ++i) {
    const StateDomain& gv = gold.variable(i);
    int li = a.variable[static_cast<std::size_t>(i)];
    const auto& gold_parents = gold.table(i).parents;
    const auto& learned_parents = learned.table(li).parents;

    // Parent order may differ between the two declarations; match by name.
    std::vector<int> parent_position(learned_parents.size(), -1);
    for (std::size_t lp = 0; lp < learned_parents.size(); ++lp) {
      const std::string& name = learned.variable(learned_parents[lp]).variable_name();
      for (std::size_t gp = 0; gp < gold_parents.size(); ++gp) {
        if (gold.variable(gold_parents[gp]).variable_name() == name) {
          parent_position[lp] = static_cast<int>(gp);
          break;
        }
      }
      if (parent_position[lp] < 0) {
        throw ValidationError("parent sets of \"" + gv.variable_name() + "\" differ between networks");
      }
    }

    double total = 0.0;
    std::uint64_t entries = 0;
    int configs = gold.parent_configuration_count(i);
    std::vector<int> learned_states(learned_parents.size(), 0);
    for (int j = 0; j < configs; ++j) {
      std::vector<int> gold_states = gold.decode_parent_configuration(i, j);
      for (std::size_t lp = 0; lp < learned_parents.size(); ++lp) {
        int gp = parent_position[lp];
        int gold_parent = gold_parents[static_cast<std::size_t>(gp)];
        int gold_state = gold_states[static_cast<std::size_t>(gp)];
        learned_states[lp] = a.state[static_cast<std::size_t>(gold_parent)][static_cast<std::size_t>(gold_state)];
      }
      int lj = learned.encode_parent_configuration(li, learned_states);
      std::vector<double> gold_row = max_normalized(gold.row(i, j), gv.variable_name());
      std::vector<double> learned_row = max_normalized(learned.row(li, lj), gv.variable_name());
      for (int k = 0; k < gv.size(); ++k) {
        int lk = a.state[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        total += std::fabs(gold_row[static_cast<std::size_t>(k)] - learned_row[static_cast<std::size_t>(lk)]);
        ++entries;
      }
    }
    out[gv.variable_name()] = total / static_cast<double>(entries);
  }
  return out;
}

double joint_distance(const PossibilisticNetwork& gold, const PossibilisticNetwork& learned, std::uint64_t cap) {
  Alignment a = align_domains(gold, learned);
  if (gold.semantics() != learned.semantics()) {
    throw ValidationError("joint distance requires matching semantics tags");
  }
  std::uint64_t size = gold.joint_size(cap);
  if (size > cap) {
    throw ValidationError("joint distance refused: assignment count exceeds cap of " + std::to_string(cap) +
                          " entries (override with PNET_OMEGA_CAP)");
  }

  double total = 0.0;
  std::vector<int> mapped(static_cast<std::size_t>(gold.variable_count()), 0);
  enumerate_joint(gold, cap, [&](std::span<const int> assignment, double gold_degree) {
    for (int i = 0; i < gold.variable_count(); ++i) {
      int li = a.variable[static_cast<std::size_t>(i)];
      mapped[static_cast<std::size_t>(li)] =
          a.state[static_cast<std::size_t>(i)][static_cast<std::size_t>(assignment[static_cast<std::size_t>(i)])];
    }
    total += std::fabs(gold_degree - joint_possibility(learned, mapped));
  });
  return total / static_cast<double>(size);
}

double joint_distance(const PossibilisticNetwork& gold, const PossibilisticNetwork& learned) {
  return joint_distance(gold, learned, default_omega_cap());
}

EvaluationReport run_experiment(const ExperimentConfig& config) {
  if (!(config.holdout_fraction >= 0.0 && config.holdout_fraction < 1.0)) {
    throw ValidationError("holdout fraction " + std::to_string(config.holdout_fraction) + " is outside [0,1)");
  }
  if (config.sampler.record_count < 1) {
    throw ValidationError("experiment needs at least one record");
  }
  std::uint64_t cap = config.omega_cap != 0 ? config.omega_cap : default_omega_cap();

  ImpreciseDataset data = sample_dataset(config.gold, config.sampler);
  std::uint64_t n = data.record_count();
  auto holdout_count = static_cast<std::uint64_t>(std::llround(config.holdout_fraction * static_cast<double>(n)));
  std::uint64_t train_count = n - holdout_count;
  ImpreciseDataset train = data.slice(0, train_count);
  ImpreciseDataset holdout = data.slice(train_count, n);

  ImprecisionBudget budget = config.budget.resolve(config.gold, train);
  LearnedParameters learned =
      learn_parameters(train, config.gold, budget, config.estimator, config.gold.semantics());

  EvaluationReport report;
  report.cpt_distance = cpt_distance(config.gold, learned.network);
  double total = 0.0;
  for (const auto& [name, d] : report.cpt_distance) total += d;
  report.cpt_distance_mean = total / static_cast<double>(report.cpt_distance.size());

  if (config.gold.joint_size(cap) <= cap) {
    report.joint_distance = joint_distance(config.gold, learned.network, cap);
  } else {
    report.joint_distance_note = "skipped: joint assignment count exceeds cap of " + std::to_string(cap);
  }

  report.train_records = train_count;
  report.holdout_records = holdout_count;
  report.holdout_pll_gold = possibilistic_loglik(config.gold, holdout);
  report.holdout_pll_learned = possibilistic_loglik(learned.network, holdout);
  report.holdout_pll_learned_raw = possibilistic_loglik(learned.raw_rows, config.gold, holdout);

  report.sampler = config.sampler;
  report.estimator = config.estimator;
  report.budget_description = config.budget.describe();
  report.holdout_fraction = config.holdout_fraction;
  report.omega_cap = cap;
  return report;
}

}  // namespace pnet
