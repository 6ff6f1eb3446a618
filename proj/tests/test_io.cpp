#include <cmath>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pnet/io.hpp"
#include "test_util.hpp"

using namespace pnet;
using nlohmann::json;

namespace {

StateDomain binary(const std::string& name) { return StateDomain(name, {name + "0", name + "1"}); }

PossibilisticNetwork two_node() {
  return PossibilisticNetwork({binary("x"), binary("y")}, {{"x", "y"}},
                              {{{1.0, 0.5}}, {{1.0, 0.2}, {0.7, 1.0}}}, Semantics::kProduct);
}

const std::string kTwoNodeDoc = R"({
  "semantics": "product",
  "variables": [
    {"name": "x", "states": ["x0", "x1"]},
    {"name": "y", "states": ["y0", "y1"]}
  ],
  "edges": [["x", "y"]],
  "cpts": {
    "x": [[1.0, 0.5]],
    "y": [[1.0, 0.2], [0.7, 1.0]]
  }
})";

// Rows compare exactly: degrees survive the JSON round trip bit for bit.
void check_same_tables(const PossibilisticNetwork& a, const PossibilisticNetwork& b) {
  REQUIRE(a.variable_count() == b.variable_count());
  for (int i = 0; i < a.variable_count(); ++i) {
    CHECK(a.variable(i) == b.variable(i));
    REQUIRE(a.parent_configuration_count(i) == b.parent_configuration_count(i));
    for (int j = 0; j < a.parent_configuration_count(i); ++j) {
      CHECK(a.row(i, j) == b.row(i, j));
    }
  }
  CHECK(a.edges() == b.edges());
  CHECK(a.semantics() == b.semantics());
}

}  // namespace

TEST_CASE("enum names used in files and reports") {
  CHECK(std::string(to_string(Semantics::kMin)) == "min");
  CHECK(std::string(to_string(Semantics::kProduct)) == "product");
  CHECK(std::string(to_string(SampleMode::kImpreciseCut)) == "imprecise");
  CHECK(std::string(to_string(SampleMode::kPreciseUniform)) == "precise");
  CHECK(std::string(to_string(EstimatorKind::kPossibilisticMle)) == "pml");
  CHECK(std::string(to_string(EstimatorKind::kHistogram)) == "histogram");
  CHECK(std::string(to_string(EstimatorKind::kRandomSet)) == "rset");
}

TEST_CASE("parse_network_json reads a full document") {
  PossibilisticNetwork net = parse_network_json(kTwoNodeDoc, "doc");
  check_same_tables(net, two_node());
  CHECK(net.semantics() == Semantics::kProduct);
  CHECK(net.table(1).parents == std::vector<int>{0});
}

TEST_CASE("edge declaration order fixes the parent order") {
  const std::string doc = R"({
    "semantics": "min",
    "variables": [
      {"name": "x", "states": ["x0", "x1"]},
      {"name": "y", "states": ["y0", "y1"]},
      {"name": "z", "states": ["z0", "z1"]}
    ],
    "edges": [["y", "z"], ["x", "z"]]
  })";
  PossibilisticNetwork net = parse_network_json(doc, "doc");
  // Parents follow edge declaration order: y before x.
  CHECK(net.table(2).parents == std::vector<int>{1, 0});
  CHECK(net.parent_configuration_count(2) == 4);
  CHECK(net.semantics() == Semantics::kMin);
}

TEST_CASE("missing cpts default to total ignorance") {
  const std::string doc = R"({
    "semantics": "product",
    "variables": [
      {"name": "x", "states": ["x0", "x1"]},
      {"name": "y", "states": ["y0", "y1"]}
    ],
    "edges": [["x", "y"]],
    "cpts": {"x": [[1.0, 0.25]]}
  })";
  PossibilisticNetwork net = parse_network_json(doc, "doc");
  CHECK(net.row(0, 0) == std::vector<double>{1.0, 0.25});
  CHECK(net.row(1, 0) == std::vector<double>{1.0, 1.0});
  CHECK(net.row(1, 1) == std::vector<double>{1.0, 1.0});
}

TEST_CASE("parse_network_json rejects malformed documents") {
  auto message_of = [](const std::string& text) {
    return test_util::validation_message([&] { parse_network_json(text, "doc"); });
  };

  SUBCASE("not JSON at all") {
    std::string m = message_of("{nope");
    CHECK(m.find("doc:") == 0);
    CHECK(m.find("not well-formed") != std::string::npos);
  }
  SUBCASE("top level must be an object") {
    CHECK(message_of("[1, 2]").find("not an object") != std::string::npos);
  }
  SUBCASE("semantics is required") {
    CHECK(message_of(R"({"variables": [{"name": "x", "states": ["a"]}]})").find("semantics") !=
          std::string::npos);
  }
  SUBCASE("semantics value is checked") {
    std::string m = message_of(R"({"semantics": "sum", "variables": [{"name": "x", "states": ["a"]}]})");
    CHECK(m.find("expected \"min\" or \"product\"") != std::string::npos);
  }
  SUBCASE("variables must be a nonempty array") {
    CHECK(message_of(R"({"semantics": "min", "variables": []})").find("variables") != std::string::npos);
  }
  SUBCASE("variable entries need a string name") {
    std::string m = message_of(R"({"semantics": "min", "variables": [{"states": ["a"]}]})");
    CHECK(m.find("name") != std::string::npos);
  }
  SUBCASE("state labels must be strings") {
    std::string m = message_of(R"({"semantics": "min", "variables": [{"name": "x", "states": [1]}]})");
    CHECK(m.find("strings") != std::string::npos);
  }
  SUBCASE("domain validation errors carry the variable position") {
    std::string m = message_of(R"({"semantics": "min", "variables": [{"name": "x", "states": ["a", "a"]}]})");
    CHECK(m.find("variables[0]") != std::string::npos);
  }
  SUBCASE("edges must name declared variables") {
    std::string m = message_of(
        R"({"semantics": "min", "variables": [{"name": "x", "states": ["a", "b"]}], "edges": [["x", "w"]]})");
    CHECK(m.find("unknown variable \"w\"") != std::string::npos);
  }
  SUBCASE("edges must be pairs of strings") {
    std::string m = message_of(
        R"({"semantics": "min", "variables": [{"name": "x", "states": ["a", "b"]}], "edges": [["x"]]})");
    CHECK(m.find("[parent, child]") != std::string::npos);
  }
  SUBCASE("cpts must name declared variables") {
    std::string m = message_of(
        R"({"semantics": "min", "variables": [{"name": "x", "states": ["a", "b"]}], "cpts": {"w": [[1.0, 1.0]]}})");
    CHECK(m.find("cpts.w") != std::string::npos);
  }
  SUBCASE("row count must match the parent configurations") {
    std::string m = message_of(
        R"({"semantics": "min", "variables": [{"name": "x", "states": ["a", "b"]}], "cpts": {"x": [[1.0, 1.0], [1.0, 0.5]]}})");
    CHECK(m.find("cpts.x") != std::string::npos);
  }
  SUBCASE("row width must match the domain size") {
    std::string m = message_of(
        R"({"semantics": "min", "variables": [{"name": "x", "states": ["a", "b"]}], "cpts": {"x": [[1.0]]}})");
    CHECK(m.find("expected 2 degrees") != std::string::npos);
  }
  SUBCASE("degrees outside the unit interval are rejected") {
    std::string m = message_of(
        R"({"semantics": "min", "variables": [{"name": "x", "states": ["a", "b"]}], "cpts": {"x": [[1.0, 1.2]]}})");
    CHECK(m.find("degree out of range") != std::string::npos);
  }
  SUBCASE("degrees must be numbers") {
    std::string m = message_of(
        R"({"semantics": "min", "variables": [{"name": "x", "states": ["a", "b"]}], "cpts": {"x": [[1.0, "hi"]]}})");
    CHECK(m.find("not a number") != std::string::npos);
  }
  SUBCASE("cyclic edges are rejected at network construction") {
    std::string m = message_of(
        R"({"semantics": "min", "variables": [{"name": "x", "states": ["a", "b"]}, {"name": "y", "states": ["a", "b"]}], "edges": [["x", "y"], ["y", "x"]]})");
    CHECK(m.find("(network)") != std::string::npos);
    CHECK(m.find("cycle") != std::string::npos);
  }
}

TEST_CASE("network writer emits a canonical form") {
  // 1/3 exercises the shortest round-trip float rendering.
  PossibilisticNetwork net({binary("x"), binary("y")}, {{"x", "y"}},
                           {{{1.0, 1.0 / 3.0}}, {{1.0, 0.1}, {0.25, 1.0}}}, Semantics::kProduct);
  std::string text = write_network_json(net);
  CHECK(text.find("\"semantics\": \"product\"") != std::string::npos);
  CHECK(text.find("0.3333333333333333") != std::string::npos);
  CHECK(text.back() == '\n');

  PossibilisticNetwork parsed = parse_network_json(text, "round-trip");
  check_same_tables(parsed, net);
  // Writing the parsed canonical document reproduces it byte for byte.
  CHECK(write_network_json(parsed) == text);
}

TEST_CASE("network file round trip") {
  test_util::TempDir dir("pnet-io");
  std::filesystem::path path = dir.file("net.json");
  PossibilisticNetwork net = two_node();
  write_network(net, path);
  PossibilisticNetwork loaded = parse_network(path);
  check_same_tables(loaded, net);
  CHECK(read_text_file(path) == write_network_json(net));
}

TEST_CASE("missing files raise a validation error") {
  std::string m = test_util::validation_message([] { parse_network("/no/such/dir/net.json"); });
  CHECK(m.find("cannot open") != std::string::npos);
  m = test_util::validation_message([] { write_text_file("/no/such/dir/out.txt", "x"); });
  CHECK(m.find("cannot open") != std::string::npos);
}

TEST_CASE("dataset CSV writer and parser agree") {
  std::vector<StateDomain> schema = {binary("x"), StateDomain("y", {"y0", "y1", "y2"})};
  StateSet x0 = StateSet::singleton(0);
  StateSet x01 = StateSet::full(2);
  StateSet y02;
  y02.insert(0);
  y02.insert(2);
  ImpreciseDataset data(schema, {{x0, y02}, {x01, StateSet::singleton(1)}});

  std::string csv = write_dataset_csv(data);
  CHECK(csv == "x,y\nx0,y0|y2\nx0|x1,y1\n");

  ImpreciseDataset parsed = parse_dataset_csv(csv, schema, "csv");
  REQUIRE(parsed.record_count() == 2);
  CHECK(parsed.records() == data.records());
  CHECK_FALSE(parsed.metadata().has_sampler_info);

  SUBCASE("carriage returns are tolerated") {
    std::string crlf;
    for (char c : csv) {
      if (c == '\n') crlf += "\r\n";
      else crlf.push_back(c);
    }
    ImpreciseDataset windows = parse_dataset_csv(crlf, schema, "csv");
    CHECK(windows.records() == data.records());
  }
  SUBCASE("header-only text parses to an empty dataset") {
    ImpreciseDataset empty = parse_dataset_csv("x,y\n", schema, "csv");
    CHECK(empty.record_count() == 0);
  }
}

TEST_CASE("dataset CSV errors carry line and column coordinates") {
  std::vector<StateDomain> schema = {binary("x"), binary("y")};
  auto message_of = [&](const std::string& text) {
    return test_util::validation_message([&] { parse_dataset_csv(text, schema, "csv"); });
  };

  CHECK(message_of("").find("missing header") != std::string::npos);
  CHECK(message_of("x,z\n").find("does not match schema") != std::string::npos);
  CHECK(message_of("x,y\nx0\n").find("1 cells for 2 variables") != std::string::npos);
  {
    std::string m = message_of("x,y\nx0,\n");
    CHECK(m.find("line 2, column 2 (y)") != std::string::npos);
    CHECK(m.find("empty cell") != std::string::npos);
  }
  {
    std::string m = message_of("x,y\nx0,y0\nx1,what\n");
    CHECK(m.find("line 3, column 2 (y)") != std::string::npos);
    CHECK(m.find("unknown state label \"what\"") != std::string::npos);
  }
  CHECK(message_of("x,y\nx0|x0,y0\n").find("duplicate state label") != std::string::npos);
  CHECK(message_of("x,y\n\nx0,y0\n").find("blank record line") != std::string::npos);
}

TEST_CASE("dataset files carry a manifest with generator settings") {
  test_util::TempDir dir("pnet-io");
  std::vector<StateDomain> schema = {binary("x")};
  DatasetMetadata meta;
  meta.seed = 9;
  meta.theta_imp = 0.25;
  meta.mode = SampleMode::kImpreciseCut;
  meta.has_sampler_info = true;
  ImpreciseDataset data(schema, {{StateSet::singleton(0)}, {StateSet::full(2)}}, meta);

  std::filesystem::path path = dir.file("data.csv");
  write_dataset(data, path);
  REQUIRE(std::filesystem::exists(path));
  std::filesystem::path manifest_path = dir.file("data.csv.manifest.json");
  REQUIRE(std::filesystem::exists(manifest_path));

  json manifest = json::parse(read_text_file(manifest_path));
  CHECK(manifest["n"] == 2);
  CHECK(manifest["seed"] == 9);
  CHECK(manifest["theta_imp"] == 0.25);
  CHECK(manifest["mode"] == "imprecise");
  CHECK(manifest.contains("normalization_tolerance"));

  ImpreciseDataset loaded = parse_dataset(path, schema);
  CHECK(loaded.records() == data.records());
  CHECK(loaded.metadata().has_sampler_info);
  CHECK(loaded.metadata().seed == 9);
  CHECK(loaded.metadata().theta_imp == 0.25);
  CHECK(loaded.metadata().mode == SampleMode::kImpreciseCut);

  SUBCASE("record count mismatch is rejected") {
    manifest["n"] = 5;
    write_text_file(manifest_path, manifest.dump(2) + "\n");
    std::string m = test_util::validation_message([&] { parse_dataset(path, schema); });
    CHECK(m.find("manifest says 5 records, CSV has 2") != std::string::npos);
  }
  SUBCASE("unknown mode strings are rejected") {
    manifest["mode"] = "fuzzy";
    write_text_file(manifest_path, manifest.dump(2) + "\n");
    std::string m = test_util::validation_message([&] { parse_dataset(path, schema); });
    CHECK(m.find("expected \"imprecise\" or \"precise\"") != std::string::npos);
  }
}

TEST_CASE("datasets without sampler provenance write a bare manifest") {
  test_util::TempDir dir("pnet-io");
  std::vector<StateDomain> schema = {binary("x")};
  ImpreciseDataset data(schema, {{StateSet::singleton(1)}});
  std::filesystem::path path = dir.file("plain.csv");
  write_dataset(data, path);

  json manifest = json::parse(read_text_file(dir.file("plain.csv.manifest.json")));
  CHECK(manifest["n"] == 1);
  CHECK_FALSE(manifest.contains("seed"));
  CHECK_FALSE(manifest.contains("theta_imp"));
  CHECK_FALSE(manifest.contains("mode"));

  ImpreciseDataset loaded = parse_dataset(path, schema);
  CHECK_FALSE(loaded.metadata().has_sampler_info);

  SUBCASE("a CSV without any manifest also loads") {
    std::filesystem::remove(dir.file("plain.csv.manifest.json"));
    ImpreciseDataset bare = parse_dataset(path, schema);
    CHECK(bare.records() == data.records());
    CHECK_FALSE(bare.metadata().has_sampler_info);
  }
}

TEST_CASE("mass table writer keys focal sets by joined labels") {
  PossibilisticNetwork structure({StateDomain("v", {"a", "b"})}, {}, {{{1.0, 1.0}}},
                                 Semantics::kProduct);
  MassFunction m(structure.variable(0),
                 {{StateSet::singleton(0), 0.75}, {StateSet::full(2), 0.25}});
  std::string text = write_mass_tables_json(structure, {{m}});
  json doc = json::parse(text);
  CHECK(doc["mass_tables"]["v"][0]["a"] == 0.75);
  CHECK(doc["mass_tables"]["v"][0]["a|b"] == 0.25);
  CHECK(doc["variables"][0]["name"] == "v");
  CHECK(doc["edges"].is_array());

  std::string m2 = test_util::validation_message([&] { write_mass_tables_json(structure, {}); });
  CHECK(m2.find("mass tables cover 0 of 1") != std::string::npos);
}

TEST_CASE("report writers") {
  EvaluationReport report;
  report.cpt_distance = {{"x", 0.125}, {"y", 0.375}};
  report.cpt_distance_mean = 0.25;
  report.joint_distance = 0.0625;
  report.train_records = 75;
  report.holdout_records = 25;
  report.holdout_pll_gold = -1.5;
  report.holdout_pll_learned = -2.5;
  report.holdout_pll_learned_raw = -std::numeric_limits<double>::infinity();
  report.sampler.theta_imp = 0.5;
  report.sampler.mode = SampleMode::kImpreciseCut;
  report.sampler.seed = 42;
  report.sampler.record_count = 100;
  report.estimator = EstimatorKind::kHistogram;
  report.budget_description = "default";
  report.holdout_fraction = 0.25;
  report.omega_cap = 1024;

  SUBCASE("JSON form") {
    json doc = json::parse(write_report_json(report));
    CHECK(doc["config"]["estimator"] == "histogram");
    CHECK(doc["config"]["budget"] == "default");
    CHECK(doc["config"]["theta_imp"] == 0.5);
    CHECK(doc["config"]["mode"] == "imprecise");
    CHECK(doc["config"]["seed"] == 42);
    CHECK(doc["config"]["n"] == 100);
    CHECK(doc["config"]["holdout_fraction"] == 0.25);
    CHECK(doc["config"]["omega_cap"] == 1024);
    CHECK(doc["cpt_distance"]["x"] == 0.125);
    CHECK(doc["cpt_distance"]["y"] == 0.375);
    CHECK(doc["cpt_distance_mean"] == 0.25);
    CHECK(doc["joint_distance"] == 0.0625);
    CHECK_FALSE(doc.contains("joint_distance_note"));
    CHECK(doc["holdout"]["records"] == 25);
    CHECK(doc["holdout"]["pll_gold"] == -1.5);
    // Non-finite values are rendered as words, JSON has no literal for them.
    CHECK(doc["holdout"]["pll_learned_raw"] == "-inf");
    CHECK(doc["train_records"] == 75);
  }
  SUBCASE("text form") {
    std::string text = write_report_text(report);
    CHECK(text.find("cpt_distance.x = 0.125\n") != std::string::npos);
    CHECK(text.find("cpt_distance_mean = 0.25\n") != std::string::npos);
    CHECK(text.find("joint_distance = 0.0625\n") != std::string::npos);
    CHECK(text.find("holdout.pll_learned_raw = -inf\n") != std::string::npos);
    CHECK(text.find("config.estimator = histogram\n") != std::string::npos);
    CHECK(text.find("train_records = 75\n") != std::string::npos);
  }
  SUBCASE("absent joint distance is spelled out") {
    report.joint_distance.reset();
    report.joint_distance_note = "skipped: joint assignment count exceeds cap of 4";
    json doc = json::parse(write_report_json(report));
    CHECK(doc["joint_distance"].is_null());
    CHECK(doc["joint_distance_note"] == report.joint_distance_note);
    std::string text = write_report_text(report);
    CHECK(text.find("joint_distance = none\n") != std::string::npos);
    CHECK(text.find("joint_distance_note = skipped") != std::string::npos);
  }
}

TEST_CASE("text file round trip preserves bytes") {
  test_util::TempDir dir("pnet-io");
  std::string payload = "line one\nline two\r\nbinary-ish \x01 bytes\n";
  std::filesystem::path path = dir.file("blob.txt");
  write_text_file(path, payload);
  CHECK(read_text_file(path) == payload);
}
