#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "pnet/network.hpp"
#include "test_util.hpp"

using namespace pnet;

namespace {

StateDomain binary(const std::string& name) { return StateDomain(name, {name + "0", name + "1"}); }

// X -> Y with X marginal [1, 0.5] and Y rows [[1, 0.2], [0.7, 1]].
PossibilisticNetwork two_node(Semantics semantics) {
  return PossibilisticNetwork({binary("x"), binary("y")}, {{"x", "y"}},
                              {{{1.0, 0.5}}, {{1.0, 0.2}, {0.7, 1.0}}}, semantics);
}

}  // namespace

TEST_CASE("network construction validates its pieces") {
  auto degrees_ok = [](double d) {
    return PossibilisticNetwork({binary("x")}, {}, {{{1.0, d}}}, Semantics::kProduct);
  };
  CHECK_NOTHROW(degrees_ok(0.0));
  CHECK_THROWS_AS(degrees_ok(1.2), ValidationError);
  CHECK_THROWS_AS(degrees_ok(-0.2), ValidationError);

  CHECK_THROWS_AS(PossibilisticNetwork({binary("x"), binary("x")}, {}, {{{1.0, 1.0}}, {{1.0, 1.0}}},
                                       Semantics::kProduct),
                  ValidationError);
  CHECK_THROWS_AS(
      PossibilisticNetwork({binary("x")}, {{"x", "z"}}, {{{1.0, 1.0}}}, Semantics::kProduct),
      ValidationError);
  CHECK_THROWS_AS(PossibilisticNetwork({binary("x"), binary("y")}, {{"x", "y"}, {"x", "y"}},
                                       {{{1.0, 1.0}}, {{1.0, 1.0}, {1.0, 1.0}}}, Semantics::kProduct),
                  ValidationError);

  // One row per parent configuration, one degree per child state.
  CHECK_THROWS_AS(PossibilisticNetwork({binary("x"), binary("y")}, {{"x", "y"}},
                                       {{{1.0, 1.0}}, {{1.0, 1.0}}}, Semantics::kProduct),
                  ValidationError);
  CHECK_THROWS_AS(PossibilisticNetwork({binary("x"), binary("y")}, {{"x", "y"}},
                                       {{{1.0, 1.0}}, {{1.0, 1.0, 1.0}, {1.0, 1.0}}}, Semantics::kProduct),
                  ValidationError);
}

TEST_CASE("topological order puts parents first with declaration-order ties") {
  PossibilisticNetwork chain({binary("x"), binary("y"), binary("z")}, {{"x", "y"}, {"y", "z"}},
                             {{{1.0, 1.0}}, {{1.0, 1.0}, {1.0, 1.0}}, {{1.0, 1.0}, {1.0, 1.0}}},
                             Semantics::kProduct);
  CHECK(topological_order(chain) == std::vector<int>{0, 1, 2});

  PossibilisticNetwork edgeless({binary("x"), binary("y")}, {}, {{{1.0, 1.0}}, {{1.0, 1.0}}},
                                Semantics::kProduct);
  CHECK(topological_order(edgeless) == std::vector<int>{0, 1});

  // Declared later but parent of an earlier variable: still ordered first.
  PossibilisticNetwork reversed({binary("y"), binary("x")}, {{"x", "y"}},
                                {{{1.0, 1.0}, {1.0, 1.0}}, {{1.0, 1.0}}}, Semantics::kProduct);
  CHECK(topological_order(reversed) == std::vector<int>{1, 0});

  std::string message = test_util::validation_message([&] {
    PossibilisticNetwork({binary("x"), binary("y")}, {{"x", "y"}, {"y", "x"}},
                         {{{1.0, 1.0}, {1.0, 1.0}}, {{1.0, 1.0}, {1.0, 1.0}}}, Semantics::kProduct);
  });
  CHECK(message.find("cycle") != std::string::npos);
  CHECK(message.find("->") != std::string::npos);
}

TEST_CASE("joint possibility applies the chain rule") {
  std::vector<int> x2y2{1, 1};
  CHECK(joint_possibility(two_node(Semantics::kMin), x2y2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(joint_possibility(two_node(Semantics::kProduct), x2y2) == doctest::Approx(0.5).epsilon(1e-12));

  PossibilisticNetwork zeroed({binary("x"), binary("y")}, {{"x", "y"}},
                              {{{1.0, 0.5}}, {{1.0, 0.2}, {0.7, 0.0}}}, Semantics::kProduct);
  CHECK(joint_possibility(zeroed, x2y2) == 0.0);
  PossibilisticNetwork zeroed_min = zeroed.with_tables(
      {{{1.0, 0.5}}, {{1.0, 0.2}, {0.7, 0.0}}}, Semantics::kMin);
  CHECK(joint_possibility(zeroed_min, x2y2) == 0.0);

  std::vector<int> product_case{1, 0};
  CHECK(joint_possibility(two_node(Semantics::kProduct), product_case) ==
        doctest::Approx(0.5 * 0.7).epsilon(1e-12));
  CHECK(joint_possibility(two_node(Semantics::kMin), product_case) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("a parentless-only joint is the combination of the marginals") {
  StateDomain x("x", {"x0", "x1"});
  StateDomain y("y", {"y0", "y1", "y2"});
  std::vector<double> px{1.0, 0.7};
  std::vector<double> py{0.5, 1.0, 0.2};
  for (Semantics s : {Semantics::kMin, Semantics::kProduct}) {
    PossibilisticNetwork net({x, y}, {}, {{px}, {py}}, s);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 3; ++j) {
        std::vector<int> assignment{i, j};
        CHECK(joint_possibility(net, assignment) ==
              doctest::Approx(combine(s, px[static_cast<std::size_t>(i)], py[static_cast<std::size_t>(j)]))
                  .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("parent configurations use mixed-radix encoding, first parent most significant") {
  StateDomain a("a", {"a0", "a1"});
  StateDomain b("b", {"b0", "b1", "b2"});
  StateDomain c("c", {"c0", "c1"});
  std::vector<std::vector<double>> c_rows(6, std::vector<double>{1.0, 1.0});
  PossibilisticNetwork net({a, b, c}, {{"a", "c"}, {"b", "c"}},
                           {{{1.0, 1.0}}, {{1.0, 1.0, 1.0}}, c_rows}, Semantics::kProduct);

  CHECK(net.parent_configuration_count(2) == 6);
  std::vector<int> parent_states{1, 2};
  CHECK(net.encode_parent_configuration(2, parent_states) == 5);
  for (int j = 0; j < 6; ++j) {
    std::vector<int> decoded = net.decode_parent_configuration(2, j);
    CHECK(net.encode_parent_configuration(2, decoded) == j);
  }
  CHECK(net.decode_parent_configuration(2, 4) == std::vector<int>{1, 1});
}

TEST_CASE("joint enumeration respects the cap") {
  PossibilisticNetwork net = two_node(Semantics::kProduct);
  CHECK(net.joint_size(100) == 4);

  int visited = 0;
  double total = 0.0;
  enumerate_joint(net, 4, [&](std::span<const int> assignment, double degree) {
    ++visited;
    total += degree;
    CHECK(assignment.size() == 2);
  });
  CHECK(visited == 4);
  CHECK(total == doctest::Approx(1.0 + 0.2 + 0.35 + 0.5).epsilon(1e-12));

  std::string message = test_util::validation_message([&] {
    enumerate_joint(net, 3, [&](std::span<const int>, double) {});
  });
  CHECK(message.find("cap") != std::string::npos);
}

TEST_CASE("the joint-enumeration cap reads PNET_OMEGA_CAP") {
  unsetenv("PNET_OMEGA_CAP");
  CHECK(default_omega_cap() == (std::uint64_t{1} << 20));
  setenv("PNET_OMEGA_CAP", "100", 1);
  CHECK(default_omega_cap() == 100);
  setenv("PNET_OMEGA_CAP", "not-a-number", 1);
  CHECK_THROWS_AS(default_omega_cap(), ValidationError);
  unsetenv("PNET_OMEGA_CAP");
}

TEST_CASE("with_tables keeps the structure and revalidates") {
  PossibilisticNetwork net = two_node(Semantics::kProduct);
  PossibilisticNetwork swapped = net.with_tables({{{1.0, 1.0}}, {{1.0, 1.0}, {1.0, 1.0}}}, Semantics::kMin);
  CHECK(swapped.semantics() == Semantics::kMin);
  CHECK(swapped.edges() == net.edges());
  CHECK(swapped.row(1, 1) == std::vector<double>{1.0, 1.0});
  CHECK_THROWS_AS(net.with_tables({{{1.0, 1.0}}}, Semantics::kMin), ValidationError);
}
