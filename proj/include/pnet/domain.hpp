#ifndef PNET_DOMAIN_HPP
#define PNET_DOMAIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pnet/common.hpp"

namespace pnet {

// Subset of a finite state domain, encoded as a bitset over state indices
// (bit k set <=> state k is a member). Domains are capped at 64 states so a
// subset fits one word; membership is O(1) and the encoding is canonical.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::uint64_t bits) : bits_(bits) {}

  static StateSet full(int domain_size);
  static StateSet singleton(int index) { return StateSet(std::uint64_t{1} << index); }

  std::uint64_t bits() const { return bits_; }
  bool contains(int index) const { return (bits_ >> index) & 1u; }
  void insert(int index) { bits_ |= std::uint64_t{1} << index; }
  void erase(int index) { bits_ &= ~(std::uint64_t{1} << index); }
  bool empty() const { return bits_ == 0; }
  int count() const;
  bool is_subset_of(const StateSet& other) const { return (bits_ & ~other.bits_) == 0; }

  StateSet intersect(const StateSet& other) const { return StateSet(bits_ & other.bits_); }
  StateSet unite(const StateSet& other) const { return StateSet(bits_ | other.bits_); }

  // Member indices in increasing order.
  std::vector<int> indices() const;

  bool operator==(const StateSet& other) const = default;
  bool operator<(const StateSet& other) const { return bits_ < other.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// A named variable together with its ordered, canonical list of state labels.
// The label order fixes the state index used by every serialization.
class StateDomain {
 public:
  StateDomain() = default;
  StateDomain(std::string variable_name, std::vector<std::string> states);

  const std::string& variable_name() const { return variable_name_; }
  const std::vector<std::string>& states() const { return states_; }
  int size() const { return static_cast<int>(states_.size()); }
  const std::string& label(int index) const;
  // Index of a label, or -1 when the label is unknown.
  int index_of(const std::string& label) const;

  StateSet complement(const StateSet& set) const { return StateSet(~set.bits() & StateSet::full(size()).bits()); }

  bool operator==(const StateDomain& other) const = default;

 private:
  std::string variable_name_;
  std::vector<std::string> states_;
};

// An event: a subset of one domain's states. Empty events are representable
// (they arise in measure queries and complements); operations that require
// nonemptiness check it themselves.
struct Event {
  StateDomain domain;
  StateSet set;

  static Event from_labels(const StateDomain& domain, const std::vector<std::string>& labels);
  std::vector<std::string> labels() const;
};

}  // namespace pnet

#endif  // PNET_DOMAIN_HPP
