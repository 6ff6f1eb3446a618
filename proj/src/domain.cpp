#include "pnet/domain.hpp"

#include <bit>
#include <unordered_set>

namespace pnet {

namespace {

constexpr int kMaxDomainSize = 64;

void check_label(const std::string& label, const std::string& kind) {
  if (label.empty()) {
    throw ValidationError(kind + " must not be empty");
  }
  for (char c : label) {
    if (c == '|' || c == ',' || c == '\n' || c == '\r') {
      throw ValidationError(kind + " \"" + label + "\" contains a reserved character ('|', ',', or newline)");
    }
  }
}

}  // namespace

StateSet StateSet::full(int domain_size) {
  if (domain_size <= 0) return StateSet();
  if (domain_size >= kMaxDomainSize) return StateSet(~std::uint64_t{0});
  return StateSet((std::uint64_t{1} << domain_size) - 1);
}

int StateSet::count() const { return std::popcount(bits_); }

std::vector<int> StateSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  std::uint64_t rest = bits_;
  while (rest != 0) {
    int k = std::countr_zero(rest);
    out.push_back(k);
    rest &= rest - 1;
  }
  return out;
}

StateDomain::StateDomain(std::string variable_name, std::vector<std::string> states)
    : variable_name_(std::move(variable_name)), states_(std::move(states)) {
  check_label(variable_name_, "variable name");
  if (states_.empty()) {
    throw ValidationError("variable \"" + variable_name_ + "\" has no states");
  }
  if (states_.size() > kMaxDomainSize) {
    throw ValidationError("variable \"" + variable_name_ + "\" has " + std::to_string(states_.size()) +
                          " states; at most 64 are supported");
  }
  std::unordered_set<std::string> seen;
  for (const std::string& s : states_) {
    check_label(s, "state label");
    if (!seen.insert(s).second) {
      throw ValidationError("variable \"" + variable_name_ + "\" repeats state label \"" + s + "\"");
    }
  }
}

const std::string& StateDomain::label(int index) const {
  if (index < 0 || index >= size()) {
    throw ValidationError("state index " + std::to_string(index) + " out of range for variable \"" +
                          variable_name_ + "\"");
  }
  return states_[static_cast<std::size_t>(index)];
}

int StateDomain::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (states_[static_cast<std::size_t>(i)] == label) return i;
  }
  return -1;
}

Event Event::from_labels(const StateDomain& domain, const std::vector<std::string>& labels) {
  Event e{domain, StateSet()};
  for (const std::string& l : labels) {
    int idx = domain.index_of(l);
    if (idx < 0) {
      throw ValidationError("unknown state label \"" + l + "\" for variable \"" + domain.variable_name() + "\"");
    }
    e.set.insert(idx);
  }
  return e;
}

std::vector<std::string> Event::labels() const {
  std::vector<std::string> out;
  for (int i : set.indices()) out.push_back(domain.label(i));
  return out;
}

}  // namespace pnet
