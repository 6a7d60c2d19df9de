/*******************************************************************************
 * Experiment orchestration behind the command-line tool: input loading,
 * strategy runs, hill-climbing runs, configuration sampling and the CSV
 * artifacts they produce.
 *
 * CSV schemas
 *   metrics.csv    edges_seen,balance,cut_score,mean_dependencies
 *                  (mean_dependencies is empty when the workload is off)
 *   outcomes.csv   step,criterion,c_before,c_after,committed,migrated,balance,cut_score
 *   compare.csv    strategy,edges,nodes,balance,cut_score
 *   configs.csv    trial,balance,cut_score
 *   id_map.csv     internal_id,external_id
 *
 * @file:   experiment.h
 ******************************************************************************/
#pragma once

#include "streampart/generators.h"
#include "streampart/optimizer.h"
#include "streampart/partitioners.h"
#include "streampart/workload.h"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace streampart {

/// Environment variable that overrides ExperimentSpec::output_dir.
inline constexpr const char *kOutputDirEnv = "STREAMPART_OUTPUT_DIR";

/// Parsed form of "powerlaw:NODES", "ring:K,SIZE,A,B", "vicious:N,n,C" or
/// "communities:COUNT,SIZE".
using GeneratorSpec = std::variant<PowerlawClusterSpec, RingSpec, ViciousSpec, CommunitySpec>;

/// Throws std::invalid_argument on an unknown kind or bad parameter list.
GeneratorSpec parse_generator(std::string_view text);
EdgeList generate(const GeneratorSpec &spec, std::uint64_t seed);

struct ExperimentSpec {
  std::variant<std::filesystem::path, GeneratorSpec> input = PowerlawClusterSpec{};
  PartitionId k = 4;
  std::optional<std::size_t> capacity; // default: ceil(1.2 * |V| / k)
  Strategy strategy = Strategy::kStreamGreedy;
  HashKind hash = HashKind::kModulo;
  std::optional<OptimizerConfig> optimizer;
  std::optional<WalkConfig> workload;
  std::uint64_t seed = 0;
  std::size_t sample_every = 100;
  std::filesystem::path output_dir = ".";
};

struct LoadedInput {
  EdgeList edges;                          // dense internal ids
  std::vector<std::uint64_t> external_ids; // internal -> external
  std::size_t nodes = 0;
  std::size_t dropped = 0; // self loops + duplicates
};

LoadedInput load_input(const ExperimentSpec &spec);

/// Output directory after applying the environment override.
std::filesystem::path resolve_output_dir(const ExperimentSpec &spec);

struct CurvePoint {
  MetricsSample metrics;
  std::optional<double> mean_dependencies;
};

struct StrategySummary {
  Strategy strategy;
  EdgeCount edges;
  std::size_t nodes;
  double balance;
  double cut_score;
};

struct ExperimentResult {
  std::vector<CurvePoint> curve;
  std::vector<StepRecord> steps; // optimizer on only
  StrategySummary summary;
  std::vector<std::filesystem::path> artifacts;
};

/// Single-strategy run (or stream-greedy + hill climbing when the optimizer
/// is set). Writes metrics.csv, id_map.csv and, with the optimizer,
/// outcomes.csv. Deterministic per seed.
ExperimentResult run_experiment(const ExperimentSpec &spec);

/// Runs every strategy on the same stream. Writes compare.csv plus one
/// metrics_<strategy>.csv per strategy.
std::vector<StrategySummary> compare_strategies(const ExperimentSpec &spec);

/// Samples uniform random assignments of the input graph and writes
/// configs.csv.
std::vector<ConfigurationSample> sample_configurations(const ExperimentSpec &spec,
                                                       std::size_t trials);

void write_metrics_csv(std::ostream &out, const std::vector<CurvePoint> &curve);
void write_outcomes_csv(std::ostream &out, const std::vector<StepRecord> &steps);
void write_compare_csv(std::ostream &out, const std::vector<StrategySummary> &rows);

} // namespace streampart
