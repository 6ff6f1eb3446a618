#include "pnet/dataset.hpp"

namespace pnet {

ImpreciseDataset::ImpreciseDataset(std::vector<StateDomain> schema, std::vector<ImpreciseObservation> records,
                                   DatasetMetadata metadata)
    : schema_(std::move(schema)), records_(std::move(records)), metadata_(metadata) {
  for (std::size_t l = 0; l < records_.size(); ++l) {
    const ImpreciseObservation& rec = records_[l];
    if (rec.size() != schema_.size()) {
      throw ValidationError("record " + std::to_string(l) + " has " + std::to_string(rec.size()) +
                            " cells for " + std::to_string(schema_.size()) + " variables");
    }
    for (std::size_t i = 0; i < rec.size(); ++i) {
      const StateDomain& domain = schema_[i];
      if (rec[i].empty()) {
        throw ValidationError("record " + std::to_string(l) + " has an empty cell for variable \"" +
                              domain.variable_name() + "\"");
      }
      if (!rec[i].is_subset_of(StateSet::full(domain.size()))) {
        throw ValidationError("record " + std::to_string(l) + " cell for \"" + domain.variable_name() +
                              "\" lies outside the domain");
      }
    }
  }
}

ImpreciseDataset ImpreciseDataset::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > records_.size()) {
    throw ValidationError("dataset slice [" + std::to_string(begin) + "," + std::to_string(end) +
                          ") out of range");
  }
  std::vector<ImpreciseObservation> part(records_.begin() + static_cast<std::ptrdiff_t>(begin),
                                         records_.begin() + static_cast<std::ptrdiff_t>(end));
  return ImpreciseDataset(schema_, std::move(part), metadata_);
}

void check_schema_match(const ImpreciseDataset& data, const std::vector<StateDomain>& expected) {
  if (data.schema().size() != expected.size()) {
    throw ValidationError("dataset schema has " + std::to_string(data.schema().size()) + " variables, expected " +
                          std::to_string(expected.size()));
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!(data.schema()[i] == expected[i])) {
      throw ValidationError("dataset schema mismatch at position " + std::to_string(i) + ": \"" +
                            data.schema()[i].variable_name() + "\" vs \"" + expected[i].variable_name() + "\"");
    }
  }
}

}  // namespace pnet
