#ifndef PNET_DATASET_HPP
#define PNET_DATASET_HPP

#include <cstdint>
#include <vector>

#include "pnet/domain.hpp"

namespace pnet {

// One record: a nonempty subset of each variable's domain, aligned with the
// dataset schema.
using ImpreciseObservation = std::vector<StateSet>;

enum class SampleMode { kImpreciseCut, kPreciseUniform };

struct DatasetMetadata {
  std::uint64_t seed = 0;
  double theta_imp = 0.0;
  SampleMode mode = SampleMode::kImpreciseCut;
  bool has_sampler_info = false;  // false for hand-built or externally loaded data
};

// Set-valued records over a fixed variable schema.
class ImpreciseDataset {
 public:
  ImpreciseDataset() = default;
  ImpreciseDataset(std::vector<StateDomain> schema, std::vector<ImpreciseObservation> records,
                   DatasetMetadata metadata = {});

  const std::vector<StateDomain>& schema() const { return schema_; }
  const std::vector<ImpreciseObservation>& records() const { return records_; }
  std::uint64_t record_count() const { return records_.size(); }
  const DatasetMetadata& metadata() const { return metadata_; }

  const StateSet& cell(std::size_t record, std::size_t variable) const { return records_[record][variable]; }

  // Records [begin, end) as a dataset with the same schema.
  ImpreciseDataset slice(std::size_t begin, std::size_t end) const;

 private:
  std::vector<StateDomain> schema_;
  std::vector<ImpreciseObservation> records_;
  DatasetMetadata metadata_;
};

// Error unless the dataset's schema names and domains match the given ones.
void check_schema_match(const ImpreciseDataset& data, const std::vector<StateDomain>& expected);

}  // namespace pnet

#endif  // PNET_DATASET_HPP
