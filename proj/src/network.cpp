#include "pnet/network.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_map>

namespace pnet {

PossibilisticNetwork::PossibilisticNetwork(std::vector<StateDomain> variables,
                                           std::vector<std::pair<std::string, std::string>> edges,
                                           std::vector<std::vector<std::vector<double>>> tables,
                                           Semantics semantics)
    : variables_(std::move(variables)), edges_(std::move(edges)), semantics_(semantics) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < variable_count(); ++i) {
    const std::string& name = variables_[static_cast<std::size_t>(i)].variable_name();
    if (!index.emplace(name, i).second) {
      throw ValidationError("duplicate variable name \"" + name + "\"");
    }
  }

  tables_.resize(variables_.size());
  std::set<std::pair<int, int>> seen_edges;
  for (const auto& [parent, child] : edges_) {
    auto pit = index.find(parent);
    auto cit = index.find(child);
    if (pit == index.end()) throw ValidationError("edge references unknown variable \"" + parent + "\"");
    if (cit == index.end()) throw ValidationError("edge references unknown variable \"" + child + "\"");
    if (!seen_edges.emplace(pit->second, cit->second).second) {
      throw ValidationError("duplicate edge " + parent + " -> " + child);
    }
    tables_[static_cast<std::size_t>(cit->second)].parents.push_back(pit->second);
  }

  if (tables.size() != variables_.size()) {
    throw ValidationError("expected " + std::to_string(variables_.size()) + " tables, got " +
                          std::to_string(tables.size()));
  }
  for (int i = 0; i < variable_count(); ++i) {
    auto& table = tables_[static_cast<std::size_t>(i)];
    table.rows = std::move(tables[static_cast<std::size_t>(i)]);
    const StateDomain& child = variables_[static_cast<std::size_t>(i)];
    int expected_rows = parent_configuration_count(i);
    if (static_cast<int>(table.rows.size()) != expected_rows) {
      throw ValidationError("table for \"" + child.variable_name() + "\" has " +
                            std::to_string(table.rows.size()) + " rows, expected " + std::to_string(expected_rows));
    }
    for (const auto& row : table.rows) {
      if (static_cast<int>(row.size()) != child.size()) {
        throw ValidationError("table row for \"" + child.variable_name() + "\" has " + std::to_string(row.size()) +
                              " degrees for " + std::to_string(child.size()) + " states");
      }
      for (double d : row) {
        if (!(d >= 0.0 && d <= 1.0)) {
          throw ValidationError("degree " + std::to_string(d) + " in table for \"" + child.variable_name() +
                                "\" is outside [0,1]");
        }
      }
    }
  }

  topological_order(*this);  // rejects cycles
}

int PossibilisticNetwork::variable_index(const std::string& name) const {
  for (int i = 0; i < variable_count(); ++i) {
    if (variable(i).variable_name() == name) return i;
  }
  return -1;
}

int PossibilisticNetwork::parent_configuration_count(int i) const {
  int count = 1;
  for (int p : table(i).parents) count *= variable(p).size();
  return count;
}

int PossibilisticNetwork::encode_parent_configuration(int i, std::span<const int> parent_states) const {
  const auto& parents = table(i).parents;
  if (parent_states.size() != parents.size()) {
    throw ValidationError("expected " + std::to_string(parents.size()) + " parent states for \"" +
                          variable(i).variable_name() + "\", got " + std::to_string(parent_states.size()));
  }
  int code = 0;
  for (std::size_t k = 0; k < parents.size(); ++k) {
    int card = variable(parents[k]).size();
    int s = parent_states[k];
    if (s < 0 || s >= card) {
      throw ValidationError("parent state index " + std::to_string(s) + " out of range for \"" +
                            variable(parents[k]).variable_name() + "\"");
    }
    code = code * card + s;
  }
  return code;
}

std::vector<int> PossibilisticNetwork::decode_parent_configuration(int i, int configuration) const {
  const auto& parents = table(i).parents;
  std::vector<int> states(parents.size(), 0);
  int rest = configuration;
  for (std::size_t k = parents.size(); k-- > 0;) {
    int card = variable(parents[k]).size();
    states[k] = rest % card;
    rest /= card;
  }
  if (rest != 0) {
    throw ValidationError("parent configuration " + std::to_string(configuration) + " out of range for \"" +
                          variable(i).variable_name() + "\"");
  }
  return states;
}

const std::vector<double>& PossibilisticNetwork::row(int i, int configuration) const {
  const auto& rows = table(i).rows;
  if (configuration < 0 || configuration >= static_cast<int>(rows.size())) {
    throw ValidationError("missing table row " + std::to_string(configuration) + " for \"" +
                          variable(i).variable_name() + "\"");
  }
  return rows[static_cast<std::size_t>(configuration)];
}

PossibilityDistribution PossibilisticNetwork::row_distribution(int i, int configuration) const {
  return PossibilityDistribution(variable(i), row(i, configuration));
}

PossibilisticNetwork PossibilisticNetwork::with_tables(std::vector<std::vector<std::vector<double>>> tables,
                                                       Semantics semantics) const {
  return PossibilisticNetwork(variables_, edges_, std::move(tables), semantics);
}

std::uint64_t PossibilisticNetwork::joint_size(std::uint64_t cap) const {
  std::uint64_t n = 1;
  for (const StateDomain& v : variables_) {
    n *= static_cast<std::uint64_t>(v.size());
    if (n > cap) return cap + 1;
  }
  return n;
}

double combine(Semantics semantics, double a, double b) {
  return semantics == Semantics::kMin ? std::min(a, b) : a * b;
}

std::vector<int> topological_order(const PossibilisticNetwork& net) {
  int n = net.variable_count();
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
  std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int p : net.table(i).parents) {
      children[static_cast<std::size_t>(p)].push_back(i);
      ++in_degree[static_cast<std::size_t>(i)];
    }
  }

  std::set<int> ready;
  for (int i = 0; i < n; ++i) {
    if (in_degree[static_cast<std::size_t>(i)] == 0) ready.insert(i);
  }
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int c : children[static_cast<std::size_t>(v)]) {
      if (--in_degree[static_cast<std::size_t>(c)] == 0) ready.insert(c);
    }
  }
  if (static_cast<int>(order.size()) == n) return order;

  // Some nodes remain on a cycle; walk parent links inside the remainder
  // until a node repeats, then report the closing edge.
  std::vector<bool> remaining(static_cast<std::size_t>(n), true);
  for (int v : order) remaining[static_cast<std::size_t>(v)] = false;
  int start = 0;
  while (!remaining[static_cast<std::size_t>(start)]) ++start;
  std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
  int v = start;
  int step = 0;
  while (seen_at[static_cast<std::size_t>(v)] < 0) {
    seen_at[static_cast<std::size_t>(v)] = step++;
    for (int p : net.table(v).parents) {
      if (remaining[static_cast<std::size_t>(p)]) {
        v = p;
        break;
      }
    }
  }
  int child_on_cycle = -1;
  for (int c : children[static_cast<std::size_t>(v)]) {
    if (remaining[static_cast<std::size_t>(c)] && seen_at[static_cast<std::size_t>(c)] >= 0) {
      child_on_cycle = c;
      break;
    }
  }
  std::string from = net.variable(v).variable_name();
  std::string to = child_on_cycle >= 0 ? net.variable(child_on_cycle).variable_name() : from;
  throw ValidationError("edges do not form a DAG: cycle through edge " + from + " -> " + to);
}

double joint_possibility(const PossibilisticNetwork& net, std::span<const int> assignment) {
  int n = net.variable_count();
  if (static_cast<int>(assignment.size()) != n) {
    throw ValidationError("joint assignment covers " + std::to_string(assignment.size()) + " of " +
                          std::to_string(n) + " variables");
  }
  double result = 1.0;  // identity of both min and product
  std::vector<int> parent_states;
  for (int i = 0; i < n; ++i) {
    int s = assignment[static_cast<std::size_t>(i)];
    if (s < 0 || s >= net.variable(i).size()) {
      throw ValidationError("state index " + std::to_string(s) + " out of range for \"" +
                            net.variable(i).variable_name() + "\"");
    }
    const auto& parents = net.table(i).parents;
    parent_states.clear();
    for (int p : parents) parent_states.push_back(assignment[static_cast<std::size_t>(p)]);
    int config = net.encode_parent_configuration(i, parent_states);
    double d = net.row(i, config)[static_cast<std::size_t>(s)];
    result = combine(net.semantics(), result, d);
  }
  return result;
}

std::uint64_t default_omega_cap() {
  if (const char* env = std::getenv("PNET_OMEGA_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    throw ValidationError(std::string("PNET_OMEGA_CAP is not a positive integer: \"") + env + "\"");
  }
  return std::uint64_t{1} << 20;
}

void enumerate_joint(const PossibilisticNetwork& net, std::uint64_t cap,
                     const std::function<void(std::span<const int>, double)>& visit) {
  std::uint64_t size = net.joint_size(cap);
  if (size > cap) {
    throw ValidationError("joint enumeration refused: assignment count exceeds cap of " + std::to_string(cap) +
                          " entries (override with PNET_OMEGA_CAP)");
  }
  int n = net.variable_count();
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  for (std::uint64_t it = 0; it < size; ++it) {
    visit(assignment, joint_possibility(net, assignment));
    for (int i = n - 1; i >= 0; --i) {
      int& s = assignment[static_cast<std::size_t>(i)];
      if (++s < net.variable(i).size()) break;
      s = 0;
    }
  }
}

}  // namespace pnet
