#ifndef PNET_NETWORK_HPP
#define PNET_NETWORK_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pnet/distribution.hpp"

namespace pnet {

// Conditional possibility table of one variable: one degree row per parent
// configuration. Rows are laid out row-major over parent state indices in
// declared parent order (the first parent is the most significant digit of
// the mixed-radix configuration index).
struct ConditionalPossibilityTable {
  std::vector<int> parents;                      // parent variable indices, in edge declaration order
  std::vector<std::vector<double>> rows;         // [parent configuration][child state]
};

// A possibilistic network: a DAG over named finite variables, a conditional
// possibility table per variable, and the combination semantics (min or
// product) that fixes the meaning of the chain rule. Immutable once built;
// every constructor argument is validated (acyclicity, table shapes, degree
// ranges, parent lists matching the edges).
class PossibilisticNetwork {
 public:
  PossibilisticNetwork() = default;
  PossibilisticNetwork(std::vector<StateDomain> variables,
                       std::vector<std::pair<std::string, std::string>> edges,
                       std::vector<std::vector<std::vector<double>>> tables, Semantics semantics);

  const std::vector<StateDomain>& variables() const { return variables_; }
  const StateDomain& variable(int i) const { return variables_[static_cast<std::size_t>(i)]; }
  int variable_count() const { return static_cast<int>(variables_.size()); }
  int variable_index(const std::string& name) const;  // -1 when unknown
  const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }
  const ConditionalPossibilityTable& table(int i) const { return tables_[static_cast<std::size_t>(i)]; }
  Semantics semantics() const { return semantics_; }

  int parent_configuration_count(int i) const;
  // Mixed-radix encoding of one parent state index per parent, declared order.
  int encode_parent_configuration(int i, std::span<const int> parent_states) const;
  std::vector<int> decode_parent_configuration(int i, int configuration) const;

  const std::vector<double>& row(int i, int configuration) const;
  PossibilityDistribution row_distribution(int i, int configuration) const;

  // Same variables/states/edges, tables replaced.
  PossibilisticNetwork with_tables(std::vector<std::vector<std::vector<double>>> tables, Semantics semantics) const;

  // Number of joint assignments, saturating at cap+1 when it exceeds cap.
  std::uint64_t joint_size(std::uint64_t cap) const;

 private:
  std::vector<StateDomain> variables_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::vector<ConditionalPossibilityTable> tables_;
  Semantics semantics_ = Semantics::kProduct;
};

// Combination operator of the chain rule.
double combine(Semantics semantics, double a, double b);

// Deterministic topological order: parents before children, ties broken by
// declaration order. A cycle is reported naming one edge on it.
std::vector<int> topological_order(const PossibilisticNetwork& net);

// Chain-rule degree of one complete assignment (state index per variable, in
// declaration order).
double joint_possibility(const PossibilisticNetwork& net, std::span<const int> assignment);

// Joint-enumeration cap: PNET_OMEGA_CAP when set, otherwise 2^20 entries.
std::uint64_t default_omega_cap();

// Calls visit(assignment, degree) for every joint assignment. Refuses when
// the assignment count exceeds the cap rather than silently truncating.
void enumerate_joint(const PossibilisticNetwork& net, std::uint64_t cap,
                     const std::function<void(std::span<const int>, double)>& visit);

}  // namespace pnet

#endif  // PNET_NETWORK_HPP
