/*******************************************************************************
 * Command-line front end: generate, partition, compare, optimize,
 * sample-configs and tradeoff.
 *
 * @file:   streampart_cli.cc
 ******************************************************************************/
#include "streampart/cost_model.h"
#include "streampart/edge_list.h"
#include "streampart/experiment.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

namespace {

using namespace streampart;

struct InputFlags {
  std::string edge_list;
  std::string generator;
};

struct WalkFlags {
  std::uint32_t walks = 0; // 0: workload off
  double alpha = 0.9;
  std::uint32_t min_hops = 3;
};

void add_input_flags(CLI::App &cmd, InputFlags &input) {
  auto *file = cmd.add_option("-i,--input", input.edge_list, "Edge-list file (\"src dst\" per line)")
                   ->check(CLI::ExistingFile);
  auto *gen = cmd.add_option("-g,--generator", input.generator,
                             "powerlaw:N[,m] | ring:K,S,A,B | vicious:N,n,C | communities:COUNT,SIZE[,m]");
  file->excludes(gen);
}

void add_spec_flags(CLI::App &cmd, ExperimentSpec &spec, std::string &hash) {
  cmd.add_option("-k,--parts", spec.k, "Number of partitions")->check(CLI::PositiveNumber);
  cmd.add_option("-c,--capacity", spec.capacity, "Partition capacity (default ceil(1.2 |V| / k))")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--hash", hash, "Random placement hash")->check(CLI::IsMember({"modulo", "mix"}));
  cmd.add_option("-s,--seed", spec.seed, "Master seed");
  cmd.add_option("--sample-every", spec.sample_every, "Edges between metric samples (0: final only)");
  cmd.add_option("-o,--output-dir", spec.output_dir,
                 std::string("Output directory (overridden by ") + kOutputDirEnv + ")");
}

void add_walk_flags(CLI::App &cmd, WalkFlags &walks, std::uint32_t default_walks) {
  walks.walks = default_walks;
  cmd.add_option("--walks", walks.walks, "Random walks per request (0 disables the workload)");
  cmd.add_option("--alpha", walks.alpha, "Walk continuation probability")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--min-hops", walks.min_hops, "Hops taken before termination is allowed");
}

void finish_spec(ExperimentSpec &spec, const InputFlags &input, const std::string &hash,
                 const WalkFlags &walks) {
  if (!input.edge_list.empty()) {
    spec.input = std::filesystem::path(input.edge_list);
  } else if (!input.generator.empty()) {
    spec.input = parse_generator(input.generator);
  }
  spec.hash = hash == "mix" ? HashKind::kMix : HashKind::kModulo;
  if (walks.walks > 0) {
    spec.workload = WalkConfig{.walks_per_request = walks.walks,
                               .alpha = walks.alpha,
                               .min_hops = walks.min_hops};
  }
}

void print_summary(const StrategySummary &s) {
  std::printf("%-14s edges %llu  nodes %zu  balance %.4f  cut_score %.4f\n",
              std::string(to_string(s.strategy)).c_str(),
              static_cast<unsigned long long>(s.edges), s.nodes, s.balance, s.cut_score);
}

void print_artifacts(const std::vector<std::filesystem::path> &artifacts) {
  for (const auto &path : artifacts) {
    std::printf("wrote %s\n", path.string().c_str());
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Streaming graph partitioning experiments"};
  app.require_subcommand(1);

  ExperimentSpec spec;
  InputFlags input;
  WalkFlags walks;
  std::string hash = "modulo";

  // generate
  auto *generate_cmd = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  std::string generator_text;
  std::string out_path;
  std::uint64_t generate_seed = 0;
  generate_cmd->add_option("generator", generator_text, "Generator spec, e.g. powerlaw:1000")
      ->required();
  generate_cmd->add_option("-s,--seed", generate_seed, "Generator seed");
  generate_cmd->add_option("-o,--out", out_path, "Output file (default stdout)");

  // partition
  auto *partition_cmd = app.add_subcommand("partition", "Stream a graph through one strategy");
  std::string strategy = "stream-greedy";
  add_input_flags(*partition_cmd, input);
  add_spec_flags(*partition_cmd, spec, hash);
  add_walk_flags(*partition_cmd, walks, 0);
  partition_cmd->add_option("--strategy", strategy, "Placement strategy")
      ->check(CLI::IsMember({"random", "stream-greedy", "baseline"}));

  // compare
  auto *compare_cmd = app.add_subcommand("compare", "Run every strategy on the same stream");
  add_input_flags(*compare_cmd, input);
  add_spec_flags(*compare_cmd, spec, hash);
  add_walk_flags(*compare_cmd, walks, 0);

  // optimize
  auto *optimize_cmd =
      app.add_subcommand("optimize", "Stream-greedy with blind hill-climbing repartitioning");
  OptimizerConfig opt;
  add_input_flags(*optimize_cmd, input);
  add_spec_flags(*optimize_cmd, spec, hash);
  add_walk_flags(*optimize_cmd, walks, WalkConfig{}.walks_per_request);
  optimize_cmd->add_option("--epsilon", opt.epsilon, "Tolerated relative slowdown before rollback");
  optimize_cmd->add_option("--topk", opt.topk_fraction, "Share of a partition migrated per step");
  optimize_cmd->add_option("--growth", opt.trigger_growth, "Relative edge growth between triggers");
  optimize_cmd->add_option("--cut-bias", opt.criterion_bias, "Probability of the cut criterion");
  optimize_cmd->add_option("--first-trigger", opt.first_trigger, "Edge count of the first trigger");
  optimize_cmd->add_option("--max-steps", opt.max_steps_per_trigger, "Hill-climbing steps per trigger");

  // sample-configs
  auto *sample_cmd =
      app.add_subcommand("sample-configs", "Balance and cut of uniform random assignments");
  std::size_t trials = 1000;
  add_input_flags(*sample_cmd, input);
  add_spec_flags(*sample_cmd, spec, hash);
  sample_cmd->add_option("-t,--trials", trials, "Number of sampled assignments")
      ->check(CLI::PositiveNumber);

  // tradeoff
  auto *tradeoff_cmd =
      app.add_subcommand("tradeoff", "Expected request times on the vicious graph");
  cost::ViciousCostInstance inst;
  tradeoff_cmd->add_option("-N,--big", inst.big, "Size of the large clusters");
  tradeoff_cmd->add_option("-n,--small", inst.small, "Size of the small clusters");
  tradeoff_cmd->add_option("-C,--c-links", inst.c_links, "Links between the cluster pairs");
  tradeoff_cmd->add_option("--chi", inst.params.chi, "Machine speed");
  tradeoff_cmd->add_option("--lambda", inst.params.lambda, "Network latency");
  tradeoff_cmd->add_option("--phi", inst.params.phi, "Per-node compute cost");
  tradeoff_cmd->add_option("--ell", inst.params.ell, "Request locality in hops");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate_cmd) {
      const auto edges = generate(parse_generator(generator_text), generate_seed);
      if (out_path.empty()) {
        write_edge_list(std::cout, edges);
      } else {
        write_edge_list(std::filesystem::path(out_path), edges);
        std::fprintf(stderr, "wrote %zu edges to %s\n", edges.size(), out_path.c_str());
      }
    } else if (*partition_cmd) {
      finish_spec(spec, input, hash, walks);
      spec.strategy = *parse_strategy(strategy);
      const auto result = run_experiment(spec);
      print_summary(result.summary);
      print_artifacts(result.artifacts);
    } else if (*compare_cmd) {
      finish_spec(spec, input, hash, walks);
      for (const auto &row : compare_strategies(spec)) {
        print_summary(row);
      }
      std::printf("wrote %s\n", (resolve_output_dir(spec) / "compare.csv").string().c_str());
    } else if (*optimize_cmd) {
      finish_spec(spec, input, hash, walks);
      spec.strategy = Strategy::kStreamGreedy;
      spec.optimizer = opt;
      const auto result = run_experiment(spec);
      std::size_t committed = 0;
      for (const auto &step : result.steps) {
        committed += step.outcome.committed ? 1 : 0;
      }
      print_summary(result.summary);
      std::printf("hill-climbing steps %zu, committed %zu\n", result.steps.size(), committed);
      print_artifacts(result.artifacts);
    } else if (*sample_cmd) {
      finish_spec(spec, input, hash, walks);
      const auto samples = sample_configurations(spec, trials);
      std::printf("sampled %zu assignments\n", samples.size());
      std::printf("wrote %s\n", (resolve_output_dir(spec) / "configs.csv").string().c_str());
    } else if (*tradeoff_cmd) {
      const double wb = cost::expected_time_wb(inst);
      const double mc = cost::expected_time_mc(inst);
      std::printf("E[T] well balanced  %.6f\n", wb);
      std::printf("E[T] minimum cut    %.6f\n", mc);
      if (inst.c_links > 1) {
        const auto sides = cost::tradeoff_sides(inst);
        std::printf("2 l lambda chi / phi = %.6f, (N - n)^2 / (C - 1) = %.6f\n", sides.application,
                    sides.graph);
      }
      std::printf("preferred: %s\n", cost::wb_preferred(inst) ? "well balanced" : "minimum cut");
    }
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
