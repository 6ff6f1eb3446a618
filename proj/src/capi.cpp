#include "pnet.h"

#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pnet/evaluation.hpp"
#include "pnet/io.hpp"

struct pnet_network {
  pnet::PossibilisticNetwork net;
};

struct pnet_dataset {
  pnet::ImpreciseDataset data;
};

namespace {

thread_local std::string g_last_error;

pnet_status record_invalid(std::string message) {
  g_last_error = std::move(message);
  return PNET_ERR_INVALID;
}

template <typename F>
pnet_status guarded(F&& body) {
  try {
    body();
    return PNET_OK;
  } catch (const pnet::ValidationError& e) {
    g_last_error = e.what();
    return PNET_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PNET_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unrecognized failure";
    return PNET_ERR_INTERNAL;
  }
}

pnet::EstimatorKind parse_estimator(const char* name) {
  std::string_view s = name == nullptr ? std::string_view() : std::string_view(name);
  if (s == "pml") return pnet::EstimatorKind::kPossibilisticMle;
  if (s == "histogram") return pnet::EstimatorKind::kHistogram;
  if (s == "rset") return pnet::EstimatorKind::kRandomSet;
  throw pnet::ValidationError("unknown estimator \"" + std::string(s) + "\" (expected pml, histogram, or rset)");
}

pnet::Semantics parse_semantics(const char* name) {
  if (name == nullptr) return pnet::Semantics::kProduct;
  std::string_view s = name;
  if (s == "product") return pnet::Semantics::kProduct;
  if (s == "min") return pnet::Semantics::kMin;
  throw pnet::ValidationError("unknown semantics \"" + std::string(s) + "\" (expected product or min)");
}

pnet::BudgetSpec parse_budget_spec(const char* spec) {
  pnet::BudgetSpec budget;
  std::string_view s = spec == nullptr ? std::string_view("default") : std::string_view(spec);
  if (s == "default") return budget;
  if (s == "mean-card") {
    budget.kind = pnet::BudgetSpec::Kind::kMeanCardinality;
    return budget;
  }
  budget.kind = pnet::BudgetSpec::Kind::kExplicit;
  std::string origin(s);
  nlohmann::json doc = nlohmann::json::parse(pnet::read_text_file(origin), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw pnet::ValidationError(origin + ": budget file is not a JSON object");
  }
  for (const auto& [name, value] : doc.items()) {
    if (!value.is_number()) {
      throw pnet::ValidationError(origin + ": budget for \"" + name + "\" is not a number");
    }
    budget.per_variable[name] = value.get<double>();
  }
  return budget;
}

pnet::SamplerConfig make_sampler_config(uint64_t record_count, double theta_imp, int precise_mode,
                                        uint64_t seed) {
  pnet::SamplerConfig config;
  config.theta_imp = theta_imp;
  config.mode = precise_mode != 0 ? pnet::SampleMode::kPreciseUniform : pnet::SampleMode::kImpreciseCut;
  config.seed = seed;
  config.record_count = record_count;
  return config;
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// Report paths accept either the base name or the .json name; both write
// <base>.json and <base>.txt.
std::string report_base_of(std::string path) {
  constexpr std::string_view kSuffix = ".json";
  if (path.size() > kSuffix.size() && path.ends_with(kSuffix)) {
    path.resize(path.size() - kSuffix.size());
  }
  return path;
}

}  // namespace

extern "C" {

const char* pnet_version(void) { return "1.0.0"; }

const char* pnet_last_error(void) { return g_last_error.c_str(); }

pnet_status pnet_network_load(const char* path, pnet_network** out) {
  if (path == nullptr || out == nullptr) return record_invalid("pnet_network_load: null argument");
  return guarded([&] { *out = new pnet_network{pnet::parse_network(path)}; });
}

pnet_status pnet_network_parse(const char* json_text, pnet_network** out) {
  if (json_text == nullptr || out == nullptr) return record_invalid("pnet_network_parse: null argument");
  return guarded([&] { *out = new pnet_network{pnet::parse_network_json(json_text, "(inline)")}; });
}

pnet_status pnet_network_save(const pnet_network* net, const char* path) {
  if (net == nullptr || path == nullptr) return record_invalid("pnet_network_save: null argument");
  return guarded([&] { pnet::write_network(net->net, path); });
}

pnet_status pnet_network_to_json(const pnet_network* net, char** out) {
  if (net == nullptr || out == nullptr) return record_invalid("pnet_network_to_json: null argument");
  return guarded([&] { *out = copy_string(pnet::write_network_json(net->net)); });
}

void pnet_network_free(pnet_network* net) { delete net; }

int pnet_network_variable_count(const pnet_network* net) {
  return net == nullptr ? 0 : net->net.variable_count();
}

pnet_status pnet_network_joint(const pnet_network* net, const char* const* labels, size_t label_count,
                               double* out) {
  if (net == nullptr || labels == nullptr || out == nullptr) {
    return record_invalid("pnet_network_joint: null argument");
  }
  return guarded([&] {
    if (label_count != static_cast<size_t>(net->net.variable_count())) {
      throw pnet::ValidationError("assignment has " + std::to_string(label_count) + " labels for " +
                                  std::to_string(net->net.variable_count()) + " variables");
    }
    std::vector<int> assignment(label_count);
    for (size_t i = 0; i < label_count; ++i) {
      if (labels[i] == nullptr) throw pnet::ValidationError("null label in assignment");
      const pnet::StateDomain& domain = net->net.variable(static_cast<int>(i));
      int idx = domain.index_of(labels[i]);
      if (idx < 0) {
        throw pnet::ValidationError("variable \"" + domain.variable_name() + "\" has no state \"" +
                                    labels[i] + "\"");
      }
      assignment[i] = idx;
    }
    *out = pnet::joint_possibility(net->net, assignment);
  });
}

pnet_status pnet_sample(const pnet_network* net, uint64_t record_count, double theta_imp, int precise_mode,
                        uint64_t seed, pnet_dataset** out) {
  if (net == nullptr || out == nullptr) return record_invalid("pnet_sample: null argument");
  return guarded([&] {
    pnet::SamplerConfig config = make_sampler_config(record_count, theta_imp, precise_mode, seed);
    *out = new pnet_dataset{pnet::sample_dataset(net->net, config)};
  });
}

pnet_status pnet_dataset_load(const char* path, const pnet_network* schema, pnet_dataset** out) {
  if (path == nullptr || schema == nullptr || out == nullptr) {
    return record_invalid("pnet_dataset_load: null argument");
  }
  return guarded([&] { *out = new pnet_dataset{pnet::parse_dataset(path, schema->net.variables())}; });
}

pnet_status pnet_dataset_save(const pnet_dataset* data, const char* path) {
  if (data == nullptr || path == nullptr) return record_invalid("pnet_dataset_save: null argument");
  return guarded([&] { pnet::write_dataset(data->data, path); });
}

uint64_t pnet_dataset_record_count(const pnet_dataset* data) {
  return data == nullptr ? 0 : data->data.record_count();
}

void pnet_dataset_free(pnet_dataset* data) { delete data; }

pnet_status pnet_learn(const pnet_network* structure, const pnet_dataset* data, const char* estimator,
                       const char* budget_spec, const char* semantics, pnet_network** out) {
  if (structure == nullptr || data == nullptr || out == nullptr) {
    return record_invalid("pnet_learn: null argument");
  }
  return guarded([&] {
    pnet::EstimatorKind kind = parse_estimator(estimator);
    pnet::ImprecisionBudget budget = parse_budget_spec(budget_spec).resolve(structure->net, data->data);
    pnet::LearnedParameters learned =
        pnet::learn_parameters(data->data, structure->net, budget, kind, parse_semantics(semantics));
    *out = new pnet_network{std::move(learned.network)};
  });
}

pnet_status pnet_learn_mass_tables(const pnet_network* structure, const pnet_dataset* data,
                                   const char* budget_spec, const char* path) {
  if (structure == nullptr || data == nullptr || path == nullptr) {
    return record_invalid("pnet_learn_mass_tables: null argument");
  }
  return guarded([&] {
    pnet::ImprecisionBudget budget = parse_budget_spec(budget_spec).resolve(structure->net, data->data);
    pnet::LearnedParameters learned =
        pnet::learn_parameters(data->data, structure->net, budget, pnet::EstimatorKind::kRandomSet);
    pnet::write_text_file(path, pnet::write_mass_tables_json(structure->net, *learned.mass_tables));
  });
}

pnet_status pnet_score(const pnet_network* net, const pnet_dataset* data, double* out) {
  if (net == nullptr || data == nullptr || out == nullptr) {
    return record_invalid("pnet_score: null argument");
  }
  return guarded([&] { *out = pnet::possibilistic_loglik(net->net, data->data); });
}

pnet_status pnet_evaluate(const pnet_network* gold, uint64_t record_count, double theta_imp,
                          int precise_mode, uint64_t seed, const char* estimator, const char* budget_spec,
                          double holdout_fraction, uint64_t omega_cap, const char* report_base) {
  if (gold == nullptr || report_base == nullptr) return record_invalid("pnet_evaluate: null argument");
  return guarded([&] {
    pnet::ExperimentConfig config{gold->net,
                                  make_sampler_config(record_count, theta_imp, precise_mode, seed),
                                  parse_estimator(estimator),
                                  parse_budget_spec(budget_spec),
                                  holdout_fraction,
                                  omega_cap};
    pnet::EvaluationReport report = pnet::run_experiment(config);
    std::string base = report_base_of(report_base);
    pnet::write_text_file(base + ".json", pnet::write_report_json(report));
    pnet::write_text_file(base + ".txt", pnet::write_report_text(report));
  });
}

void pnet_string_free(char* text) { delete[] text; }

}  // extern "C"
