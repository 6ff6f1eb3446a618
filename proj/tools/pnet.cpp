// Command-line front end; talks to the library exclusively through the C
// interface in pnet.h. Exit codes: 0 success, 2 rejected input, 1 internal
// failure.
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "pnet.h"

namespace {

using NetworkPtr = std::unique_ptr<pnet_network, decltype(&pnet_network_free)>;
using DatasetPtr = std::unique_ptr<pnet_dataset, decltype(&pnet_dataset_free)>;

int exit_code_of(pnet_status status) {
  if (status == PNET_OK) return 0;
  std::fprintf(stderr, "pnet: error: %s\n", pnet_last_error());
  return status == PNET_ERR_INVALID ? 2 : 1;
}

// Runs one library call; on failure prints the error and stores the exit
// code. Returns false once a step has failed so callers can chain steps.
struct Pipeline {
  int exit_code = 0;

  bool step(pnet_status status) {
    if (exit_code != 0) return false;
    exit_code = exit_code_of(status);
    return exit_code == 0;
  }
};

struct SampleArgs {
  std::string net_path;
  std::uint64_t n = 0;
  double theta = 0.0;
  std::string mode = "imprecise";
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_sample(const SampleArgs& args) {
  Pipeline p;
  NetworkPtr net(nullptr, pnet_network_free);
  DatasetPtr data(nullptr, pnet_dataset_free);
  {
    pnet_network* raw = nullptr;
    if (p.step(pnet_network_load(args.net_path.c_str(), &raw))) net.reset(raw);
  }
  {
    pnet_dataset* raw = nullptr;
    if (p.step(pnet_sample(net.get(), args.n, args.theta, args.mode == "precise" ? 1 : 0, args.seed, &raw))) {
      data.reset(raw);
    }
  }
  p.step(pnet_dataset_save(data.get(), args.out_path.c_str()));
  return p.exit_code;
}

struct LearnArgs {
  std::string structure_path;
  std::string data_path;
  std::string estimator = "pml";
  std::string budget = "default";
  std::string semantics = "product";
  std::string out_path;
};

int run_learn(const LearnArgs& args) {
  Pipeline p;
  NetworkPtr structure(nullptr, pnet_network_free);
  DatasetPtr data(nullptr, pnet_dataset_free);
  {
    pnet_network* raw = nullptr;
    if (p.step(pnet_network_load(args.structure_path.c_str(), &raw))) structure.reset(raw);
  }
  {
    pnet_dataset* raw = nullptr;
    if (p.step(pnet_dataset_load(args.data_path.c_str(), structure.get(), &raw))) data.reset(raw);
  }
  if (args.estimator == "rset") {
    // The random-set fit is a set of mass functions, not a network; it gets
    // its own JSON document.
    p.step(pnet_learn_mass_tables(structure.get(), data.get(), args.budget.c_str(), args.out_path.c_str()));
    return p.exit_code;
  }
  NetworkPtr learned(nullptr, pnet_network_free);
  {
    pnet_network* raw = nullptr;
    if (p.step(pnet_learn(structure.get(), data.get(), args.estimator.c_str(), args.budget.c_str(),
                          args.semantics.c_str(), &raw))) {
      learned.reset(raw);
    }
  }
  p.step(pnet_network_save(learned.get(), args.out_path.c_str()));
  return p.exit_code;
}

struct ScoreArgs {
  std::string net_path;
  std::string data_path;
};

int run_score(const ScoreArgs& args) {
  Pipeline p;
  NetworkPtr net(nullptr, pnet_network_free);
  DatasetPtr data(nullptr, pnet_dataset_free);
  {
    pnet_network* raw = nullptr;
    if (p.step(pnet_network_load(args.net_path.c_str(), &raw))) net.reset(raw);
  }
  {
    pnet_dataset* raw = nullptr;
    if (p.step(pnet_dataset_load(args.data_path.c_str(), net.get(), &raw))) data.reset(raw);
  }
  double value = 0.0;
  if (p.step(pnet_score(net.get(), data.get(), &value))) std::printf("%.12g\n", value);
  return p.exit_code;
}

struct EvaluateArgs {
  std::string gold_path;
  std::uint64_t n = 0;
  double theta = 0.0;
  std::string mode = "imprecise";
  std::uint64_t seed = 0;
  std::string estimator = "pml";
  std::string budget = "default";
  double holdout = 0.0;
  std::uint64_t omega_cap = 0;
  std::string report_path;
};

int run_evaluate(const EvaluateArgs& args) {
  Pipeline p;
  NetworkPtr gold(nullptr, pnet_network_free);
  {
    pnet_network* raw = nullptr;
    if (p.step(pnet_network_load(args.gold_path.c_str(), &raw))) gold.reset(raw);
  }
  p.step(pnet_evaluate(gold.get(), args.n, args.theta, args.mode == "precise" ? 1 : 0, args.seed,
                       args.estimator.c_str(), args.budget.c_str(), args.holdout, args.omega_cap,
                       args.report_path.c_str()));
  return p.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"possibilistic network toolkit: sampling, learning, scoring, evaluation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pnet_version());
  app.failure_message(CLI::FailureMessage::help);

  SampleArgs sample;
  CLI::App* sample_cmd = app.add_subcommand("sample", "draw an imprecise dataset from a network");
  sample_cmd->add_option("--net", sample.net_path, "network JSON file")->required();
  sample_cmd->add_option("--n", sample.n, "number of records")->required();
  sample_cmd->add_option("--theta", sample.theta, "imprecision degree in [0,1] (default 0)");
  sample_cmd->add_option("--mode", sample.mode, "imprecise or precise (default imprecise)")
      ->check(CLI::IsMember({"imprecise", "precise"}));
  sample_cmd->add_option("--seed", sample.seed, "generator seed")->required();
  sample_cmd->add_option("--out", sample.out_path, "output dataset CSV path")->required();

  LearnArgs learn;
  CLI::App* learn_cmd = app.add_subcommand("learn", "fit table parameters to a dataset");
  learn_cmd->add_option("--structure", learn.structure_path, "network JSON file giving the structure")
      ->required();
  learn_cmd->add_option("--data", learn.data_path, "dataset CSV file")->required();
  learn_cmd->add_option("--estimator", learn.estimator, "pml, histogram, or rset (default pml)")
      ->check(CLI::IsMember({"pml", "histogram", "rset"}));
  learn_cmd->add_option("--budget", learn.budget,
                        "default, mean-card, or a JSON file of per-variable budgets (default: default)");
  learn_cmd->add_option("--semantics", learn.semantics, "tag for the learned network (default product)")
      ->check(CLI::IsMember({"product", "min"}));
  learn_cmd->add_option("--out", learn.out_path,
                        "output path: network JSON, or mass-table JSON for rset")
      ->required();

  ScoreArgs score;
  CLI::App* score_cmd = app.add_subcommand("score", "print the possibilistic log-likelihood of a dataset");
  score_cmd->add_option("--net", score.net_path, "network JSON file")->required();
  score_cmd->add_option("--data", score.data_path, "dataset CSV file")->required();

  EvaluateArgs evaluate;
  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "sample from a gold network, learn, and report the comparison");
  evaluate_cmd->add_option("--gold", evaluate.gold_path, "gold network JSON file")->required();
  evaluate_cmd->add_option("--n", evaluate.n, "number of records to sample")->required();
  evaluate_cmd->add_option("--theta", evaluate.theta, "imprecision degree in [0,1] (default 0)");
  evaluate_cmd->add_option("--mode", evaluate.mode, "imprecise or precise (default imprecise)")
      ->check(CLI::IsMember({"imprecise", "precise"}));
  evaluate_cmd->add_option("--seed", evaluate.seed, "generator seed")->required();
  evaluate_cmd->add_option("--estimator", evaluate.estimator, "pml, histogram, or rset (default pml)")
      ->check(CLI::IsMember({"pml", "histogram", "rset"}));
  evaluate_cmd->add_option("--budget", evaluate.budget,
                           "default, mean-card, or a JSON file of per-variable budgets (default: default)");
  evaluate_cmd->add_option("--holdout", evaluate.holdout,
                           "fraction of records scored instead of trained on, in [0,1) (default 0)");
  evaluate_cmd->add_option("--omega-cap", evaluate.omega_cap,
                           "joint-enumeration cap; 0 uses the built-in default");
  evaluate_cmd->add_option("--report", evaluate.report_path, "report base path; writes <base>.json and <base>.txt")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (sample_cmd->parsed()) return run_sample(sample);
  if (learn_cmd->parsed()) return run_learn(learn);
  if (score_cmd->parsed()) return run_score(score);
  return run_evaluate(evaluate);
}
