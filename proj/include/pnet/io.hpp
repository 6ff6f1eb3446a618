#ifndef PNET_IO_HPP
#define PNET_IO_HPP

#include <filesystem>
#include <string>

#include "pnet/evaluation.hpp"

namespace pnet {

// Network JSON document:
//   {
//     "cpts": {var: [row arrays, row-major over parent state indices in
//                    declared parent order]},
//     "edges": [[parent, child], ...],
//     "semantics": "min" | "product",
//     "variables": [{"name": ..., "states": [...]}, ...]
//   }
// "cpts" may be omitted (or omit individual variables) for structure-only
// files; missing rows default to total ignorance. The writer emits sorted
// keys and shortest round-trip float literals, so writing a parsed canonical
// file reproduces it byte for byte.
PossibilisticNetwork parse_network_json(const std::string& text, const std::string& origin);
PossibilisticNetwork parse_network(const std::filesystem::path& path);
std::string write_network_json(const PossibilisticNetwork& net);
void write_network(const PossibilisticNetwork& net, const std::filesystem::path& path);

// Dataset CSV: header = variable names in schema order; one record per line;
// each cell is a state label or several labels joined by '|'. A sidecar
// manifest (<path>.manifest.json) records the generator seed, theta_imp,
// mode, and record count.
ImpreciseDataset parse_dataset_csv(const std::string& text, const std::vector<StateDomain>& schema,
                                   const std::string& origin);
ImpreciseDataset parse_dataset(const std::filesystem::path& path, const std::vector<StateDomain>& schema);
std::string write_dataset_csv(const ImpreciseDataset& data);
std::string write_dataset_manifest_json(const ImpreciseDataset& data);
// Writes the CSV and its sidecar manifest.
void write_dataset(const ImpreciseDataset& data, const std::filesystem::path& path);

// Learned random-set parameters: focal sets keyed by their '|'-joined label
// encoding, one object per parent configuration.
std::string write_mass_tables_json(const PossibilisticNetwork& structure,
                                   const std::vector<std::vector<MassFunction>>& tables);

std::string write_report_json(const EvaluationReport& report);
std::string write_report_text(const EvaluationReport& report);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

const char* to_string(Semantics semantics);
const char* to_string(SampleMode mode);
const char* to_string(EstimatorKind estimator);

}  // namespace pnet

#endif  // PNET_IO_HPP
