#include "pnet/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pnet {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& where, const std::string& reason) {
  throw ValidationError(origin + ": " + where + ": " + reason);
}

double degree_at(const json& value, const std::string& origin, const std::string& where) {
  if (!value.is_number()) fail(origin, where, "degree is not a number");
  double d = value.get<double>();
  if (!(d >= 0.0 && d <= 1.0)) fail(origin, where, "degree out of range [0,1]");
  return d;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::string join_labels(const StateDomain& domain, const StateSet& set) {
  std::string out;
  for (int i : set.indices()) {
    if (!out.empty()) out.push_back('|');
    out += domain.label(i);
  }
  return out;
}

// Doubles rendered the way the JSON writer renders them (shortest round-trip
// form), so text and JSON reports agree; non-finite values as words.
std::string number_repr(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return json(value).dump();
}

json json_number(double value) {
  if (std::isnan(value) || std::isinf(value)) return json(number_repr(value));
  return json(value);
}

json report_to_json(const EvaluationReport& report) {
  json j;
  j["config"]["estimator"] = to_string(report.estimator);
  j["config"]["budget"] = report.budget_description;
  j["config"]["holdout_fraction"] = report.holdout_fraction;
  j["config"]["mode"] = to_string(report.sampler.mode);
  j["config"]["n"] = report.sampler.record_count;
  j["config"]["omega_cap"] = report.omega_cap;
  j["config"]["seed"] = report.sampler.seed;
  j["config"]["theta_imp"] = report.sampler.theta_imp;
  for (const auto& [name, d] : report.cpt_distance) j["cpt_distance"][name] = json_number(d);
  j["cpt_distance_mean"] = json_number(report.cpt_distance_mean);
  if (report.joint_distance.has_value()) {
    j["joint_distance"] = json_number(*report.joint_distance);
  } else {
    j["joint_distance"] = nullptr;
    j["joint_distance_note"] = report.joint_distance_note;
  }
  j["holdout"]["records"] = report.holdout_records;
  j["holdout"]["pll_gold"] = json_number(report.holdout_pll_gold);
  j["holdout"]["pll_learned"] = json_number(report.holdout_pll_learned);
  j["holdout"]["pll_learned_raw"] = json_number(report.holdout_pll_learned_raw);
  j["train_records"] = report.train_records;
  return j;
}

}  // namespace

const char* to_string(Semantics semantics) { return semantics == Semantics::kMin ? "min" : "product"; }

const char* to_string(SampleMode mode) {
  return mode == SampleMode::kPreciseUniform ? "precise" : "imprecise";
}

const char* to_string(EstimatorKind estimator) {
  switch (estimator) {
    case EstimatorKind::kPossibilisticMle:
      return "pml";
    case EstimatorKind::kHistogram:
      return "histogram";
    case EstimatorKind::kRandomSet:
      return "rset";
  }
  return "unknown";
}

PossibilisticNetwork parse_network_json(const std::string& text, const std::string& origin) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(origin, "(document)", "not well-formed JSON");
  if (!doc.is_object()) fail(origin, "(document)", "top level is not an object");

  if (!doc.contains("semantics")) fail(origin, "semantics", "missing");
  if (!doc["semantics"].is_string()) fail(origin, "semantics", "not a string");
  std::string sem = doc["semantics"].get<std::string>();
  Semantics semantics;
  if (sem == "min") {
    semantics = Semantics::kMin;
  } else if (sem == "product") {
    semantics = Semantics::kProduct;
  } else {
    fail(origin, "semantics", "expected \"min\" or \"product\", got \"" + sem + "\"");
  }

  if (!doc.contains("variables") || !doc["variables"].is_array() || doc["variables"].empty()) {
    fail(origin, "variables", "missing or not a nonempty array");
  }
  std::vector<StateDomain> variables;
  for (std::size_t i = 0; i < doc["variables"].size(); ++i) {
    const json& v = doc["variables"][i];
    std::string where = "variables[" + std::to_string(i) + "]";
    if (!v.is_object() || !v.contains("name") || !v["name"].is_string()) fail(origin, where, "needs a string name");
    if (!v.contains("states") || !v["states"].is_array()) fail(origin, where + ".states", "missing or not an array");
    std::vector<std::string> states;
    for (const json& s : v["states"]) {
      if (!s.is_string()) fail(origin, where + ".states", "state labels must be strings");
      states.push_back(s.get<std::string>());
    }
    try {
      variables.emplace_back(v["name"].get<std::string>(), std::move(states));
    } catch (const ValidationError& e) {
      fail(origin, where, e.what());
    }
  }

  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) fail(origin, "edges", "not an array");
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const json& e = doc["edges"][i];
      std::string where = "edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        fail(origin, where, "expected a [parent, child] pair of strings");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }

  // Parent counts come from the edges; build per-variable row shapes first so
  // missing cpts can default to total ignorance.
  std::vector<std::vector<int>> parents(variables.size());
  auto index_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (variables[i].variable_name() == name) return static_cast<int>(i);
    }
    return -1;
  };
  for (const auto& [p, c] : edges) {
    int ci = index_of(c);
    int pi = index_of(p);
    if (pi < 0) fail(origin, "edges", "unknown variable \"" + p + "\"");
    if (ci < 0) fail(origin, "edges", "unknown variable \"" + c + "\"");
    parents[static_cast<std::size_t>(ci)].push_back(pi);
  }

  std::vector<std::vector<std::vector<double>>> tables(variables.size());
  for (std::size_t i = 0; i < variables.size(); ++i) {
    int rows = 1;
    for (int p : parents[i]) rows *= variables[static_cast<std::size_t>(p)].size();
    tables[i].assign(static_cast<std::size_t>(rows),
                     std::vector<double>(static_cast<std::size_t>(variables[i].size()), 1.0));
  }

  if (doc.contains("cpts")) {
    if (!doc["cpts"].is_object()) fail(origin, "cpts", "not an object");
    for (const auto& [name, rows] : doc["cpts"].items()) {
      int vi = index_of(name);
      if (vi < 0) fail(origin, "cpts." + name, "unknown variable");
      if (!rows.is_array()) fail(origin, "cpts." + name, "not an array of rows");
      auto& table = tables[static_cast<std::size_t>(vi)];
      if (rows.size() != table.size()) {
        fail(origin, "cpts." + name,
             "has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(table.size()));
      }
      for (std::size_t j = 0; j < rows.size(); ++j) {
        const json& row = rows[j];
        std::string where = "cpts." + name + "[" + std::to_string(j) + "]";
        if (!row.is_array() || row.size() != table[j].size()) {
          fail(origin, where, "expected " + std::to_string(table[j].size()) + " degrees");
        }
        for (std::size_t k = 0; k < row.size(); ++k) {
          table[j][k] = degree_at(row[k], origin, where + "[" + std::to_string(k) + "]");
        }
      }
    }
  }

  try {
    return PossibilisticNetwork(std::move(variables), std::move(edges), std::move(tables), semantics);
  } catch (const ValidationError& e) {
    fail(origin, "(network)", e.what());
  }
}

PossibilisticNetwork parse_network(const std::filesystem::path& path) {
  return parse_network_json(read_text_file(path), path.string());
}

std::string write_network_json(const PossibilisticNetwork& net) {
  json doc;
  doc["semantics"] = to_string(net.semantics());
  doc["variables"] = json::array();
  for (const StateDomain& v : net.variables()) {
    doc["variables"].push_back({{"name", v.variable_name()}, {"states", v.states()}});
  }
  doc["edges"] = json::array();
  for (const auto& [p, c] : net.edges()) doc["edges"].push_back({p, c});
  doc["cpts"] = json::object();
  for (int i = 0; i < net.variable_count(); ++i) {
    doc["cpts"][net.variable(i).variable_name()] = net.table(i).rows;
  }
  return doc.dump(2) + "\n";
}

void write_network(const PossibilisticNetwork& net, const std::filesystem::path& path) {
  write_text_file(path, write_network_json(net));
}

ImpreciseDataset parse_dataset_csv(const std::string& text, const std::vector<StateDomain>& schema,
                                   const std::string& origin) {
  std::vector<std::string> lines = split(text, '\n');
  // Writers end the file with a newline, which split() turns into one
  // trailing empty entry.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (std::string& line : lines) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
  }
  if (lines.empty()) fail(origin, "line 1", "missing header");

  std::string expected_header;
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (i > 0) expected_header.push_back(',');
    expected_header += schema[i].variable_name();
  }
  if (lines[0] != expected_header) {
    fail(origin, "line 1", "header \"" + lines[0] + "\" does not match schema \"" + expected_header + "\"");
  }

  std::vector<ImpreciseObservation> records;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    if (lines[ln].empty()) fail(origin, "line " + std::to_string(ln + 1), "blank record line");
    std::vector<std::string> cells = split(lines[ln], ',');
    if (cells.size() != schema.size()) {
      fail(origin, "line " + std::to_string(ln + 1),
           "has " + std::to_string(cells.size()) + " cells for " + std::to_string(schema.size()) + " variables");
    }
    ImpreciseObservation record(schema.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::string where = "line " + std::to_string(ln + 1) + ", column " + std::to_string(c + 1) + " (" +
                          schema[c].variable_name() + ")";
      if (cells[c].empty()) fail(origin, where, "empty cell");
      StateSet set;
      for (const std::string& label : split(cells[c], '|')) {
        int idx = schema[c].index_of(label);
        if (idx < 0) fail(origin, where, "unknown state label \"" + label + "\"");
        if (set.contains(idx)) fail(origin, where, "duplicate state label \"" + label + "\"");
        set.insert(idx);
      }
      record[c] = set;
    }
    records.push_back(std::move(record));
  }
  return ImpreciseDataset(schema, std::move(records));
}

ImpreciseDataset parse_dataset(const std::filesystem::path& path, const std::vector<StateDomain>& schema) {
  ImpreciseDataset data = parse_dataset_csv(read_text_file(path), schema, path.string());

  std::filesystem::path manifest_path = path;
  manifest_path += ".manifest.json";
  if (!std::filesystem::exists(manifest_path)) return data;

  std::string origin = manifest_path.string();
  json doc = json::parse(read_text_file(manifest_path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) fail(origin, "(document)", "not a JSON object");
  DatasetMetadata meta;
  if (doc.contains("seed")) meta.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("theta_imp")) meta.theta_imp = doc["theta_imp"].get<double>();
  if (doc.contains("mode")) {
    std::string mode = doc["mode"].get<std::string>();
    if (mode == "precise") {
      meta.mode = SampleMode::kPreciseUniform;
    } else if (mode == "imprecise") {
      meta.mode = SampleMode::kImpreciseCut;
    } else {
      fail(origin, "mode", "expected \"imprecise\" or \"precise\", got \"" + mode + "\"");
    }
  }
  if (doc.contains("n") && doc["n"].get<std::uint64_t>() != data.record_count()) {
    fail(origin, "n",
         "manifest says " + doc["n"].dump() + " records, CSV has " + std::to_string(data.record_count()));
  }
  meta.has_sampler_info = doc.contains("seed");
  return ImpreciseDataset(data.schema(), std::vector<ImpreciseObservation>(data.records()), meta);
}

std::string write_dataset_csv(const ImpreciseDataset& data) {
  std::string out;
  const auto& schema = data.schema();
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += schema[i].variable_name();
  }
  out.push_back('\n');
  for (const ImpreciseObservation& record : data.records()) {
    for (std::size_t i = 0; i < schema.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += join_labels(schema[i], record[i]);
    }
    out.push_back('\n');
  }
  return out;
}

std::string write_dataset_manifest_json(const ImpreciseDataset& data) {
  json doc;
  doc["n"] = data.record_count();
  doc["normalization_tolerance"] = kDegreeTolerance;
  if (data.metadata().has_sampler_info) {
    doc["mode"] = to_string(data.metadata().mode);
    doc["seed"] = data.metadata().seed;
    doc["theta_imp"] = data.metadata().theta_imp;
  }
  return doc.dump(2) + "\n";
}

void write_dataset(const ImpreciseDataset& data, const std::filesystem::path& path) {
  write_text_file(path, write_dataset_csv(data));
  std::filesystem::path manifest_path = path;
  manifest_path += ".manifest.json";
  write_text_file(manifest_path, write_dataset_manifest_json(data));
}

std::string write_mass_tables_json(const PossibilisticNetwork& structure,
                                   const std::vector<std::vector<MassFunction>>& tables) {
  if (tables.size() != static_cast<std::size_t>(structure.variable_count())) {
    throw ValidationError("mass tables cover " + std::to_string(tables.size()) + " of " +
                          std::to_string(structure.variable_count()) + " variables");
  }
  json doc;
  doc["variables"] = json::array();
  for (const StateDomain& v : structure.variables()) {
    doc["variables"].push_back({{"name", v.variable_name()}, {"states", v.states()}});
  }
  doc["edges"] = json::array();
  for (const auto& [p, c] : structure.edges()) doc["edges"].push_back({p, c});
  doc["mass_tables"] = json::object();
  for (int i = 0; i < structure.variable_count(); ++i) {
    const StateDomain& domain = structure.variable(i);
    json rows = json::array();
    for (const MassFunction& m : tables[static_cast<std::size_t>(i)]) {
      json row = json::object();
      for (const auto& [focal, mass] : m.assignments()) row[join_labels(domain, focal)] = mass;
      rows.push_back(std::move(row));
    }
    doc["mass_tables"][domain.variable_name()] = std::move(rows);
  }
  return doc.dump(2) + "\n";
}

std::string write_report_json(const EvaluationReport& report) { return report_to_json(report).dump(2) + "\n"; }

std::string write_report_text(const EvaluationReport& report) {
  std::ostringstream out;
  auto emit = [&](const std::string& key, const std::string& value) { out << key << " = " << value << "\n"; };

  emit("config.budget", report.budget_description);
  emit("config.estimator", to_string(report.estimator));
  emit("config.holdout_fraction", number_repr(report.holdout_fraction));
  emit("config.mode", to_string(report.sampler.mode));
  emit("config.n", std::to_string(report.sampler.record_count));
  emit("config.omega_cap", std::to_string(report.omega_cap));
  emit("config.seed", std::to_string(report.sampler.seed));
  emit("config.theta_imp", number_repr(report.sampler.theta_imp));
  for (const auto& [name, d] : report.cpt_distance) emit("cpt_distance." + name, number_repr(d));
  emit("cpt_distance_mean", number_repr(report.cpt_distance_mean));
  emit("holdout.pll_gold", number_repr(report.holdout_pll_gold));
  emit("holdout.pll_learned", number_repr(report.holdout_pll_learned));
  emit("holdout.pll_learned_raw", number_repr(report.holdout_pll_learned_raw));
  emit("holdout.records", std::to_string(report.holdout_records));
  if (report.joint_distance.has_value()) {
    emit("joint_distance", number_repr(*report.joint_distance));
  } else {
    emit("joint_distance", "none");
    emit("joint_distance_note", report.joint_distance_note);
  }
  emit("train_records", std::to_string(report.train_records));
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open \"" + path.string() + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw ValidationError("error while reading \"" + path.string() + "\"");
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open \"" + path.string() + "\" for writing");
  out << content;
  out.flush();
  if (!out) throw ValidationError("error while writing \"" + path.string() + "\"");
}

}  // namespace pnet
