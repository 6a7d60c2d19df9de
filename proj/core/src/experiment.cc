/*******************************************************************************
 * @file:   experiment.cc
 ******************************************************************************/
#include "streampart/experiment.h"

#include "streampart/edge_list.h"
#include "streampart/random.h"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace streampart {

namespace {

std::vector<std::uint32_t> parse_numbers(std::string_view list, std::string_view kind) {
  std::vector<std::uint32_t> values;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view token = list.substr(0, comma);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument(fmt::format("{}: bad parameter '{}'", kind, token));
    }
    values.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    list.remove_prefix(comma + 1);
  }
  return values;
}

std::ofstream open_output(const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  return out;
}

NodeHash make_hash(const ExperimentSpec &spec) {
  return NodeHash{spec.hash, derive_seed(spec.seed, seed_label::kHashSalt)};
}

} // namespace

GeneratorSpec parse_generator(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const auto values = parse_numbers(params, kind);
  auto expect = [&](std::size_t lo, std::size_t hi) {
    if (values.size() < lo || values.size() > hi) {
      throw std::invalid_argument(
          fmt::format("{}: expected {} to {} parameters, got {}", kind, lo, hi, values.size()));
    }
  };

  if (kind == "powerlaw") {
    expect(1, 2);
    PowerlawClusterSpec spec{.nodes = values[0]};
    if (values.size() > 1) {
      spec.attachment = values[1];
    }
    if (spec.nodes < 10) {
      throw std::invalid_argument("powerlaw: at least 10 nodes required");
    }
    return spec;
  }
  if (kind == "ring") {
    expect(4, 4);
    RingSpec spec{values[0], values[1], values[2], values[3]};
    validate(spec);
    return spec;
  }
  if (kind == "vicious") {
    expect(3, 3);
    ViciousSpec spec{values[0], values[1], values[2]};
    validate(spec);
    return spec;
  }
  if (kind == "communities") {
    expect(2, 3);
    CommunitySpec spec{.communities = values[0], .community_size = values[1]};
    if (values.size() > 2) {
      spec.attachment = values[2];
    }
    return spec;
  }
  throw std::invalid_argument(fmt::format("unknown generator '{}'", kind));
}

EdgeList generate(const GeneratorSpec &spec, std::uint64_t seed) {
  return std::visit(
      [seed](const auto &s) -> EdgeList {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PowerlawClusterSpec>) {
          return gen_powerlaw_cluster(s, seed);
        } else if constexpr (std::is_same_v<T, RingSpec>) {
          return gen_ring(s);
        } else if constexpr (std::is_same_v<T, ViciousSpec>) {
          return gen_vicious(s);
        } else {
          return gen_communities(s, seed);
        }
      },
      spec);
}

LoadedInput load_input(const ExperimentSpec &spec) {
  LoadedInput input;
  if (const auto *path = std::get_if<std::filesystem::path>(&spec.input)) {
    IngestResult ingested = ingest_edge_list(*path);
    input.edges.assign(ingested.events.begin(), ingested.events.end());
    input.external_ids = std::move(ingested.external_ids);
    input.dropped = ingested.warnings();
  } else {
    input.edges = generate(std::get<GeneratorSpec>(spec.input), spec.seed);
    const std::size_t bound = node_id_bound(input.edges);
    input.external_ids.resize(bound);
    for (std::size_t i = 0; i < bound; ++i) {
      input.external_ids[i] = i;
    }
  }
  input.nodes = input.external_ids.size();
  return input;
}

std::filesystem::path resolve_output_dir(const ExperimentSpec &spec) {
  if (const char *env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return spec.output_dir;
}

void write_metrics_csv(std::ostream &out, const std::vector<CurvePoint> &curve) {
  out << "edges_seen,balance,cut_score,mean_dependencies\n";
  for (const CurvePoint &p : curve) {
    fmt::print(out, "{},{:.6f},{:.6f},", p.metrics.edges_seen, p.metrics.balance,
               p.metrics.cut_score);
    if (p.mean_dependencies) {
      fmt::print(out, "{:.6f}", *p.mean_dependencies);
    }
    out << '\n';
  }
}

void write_outcomes_csv(std::ostream &out, const std::vector<StepRecord> &steps) {
  out << "step,criterion,c_before,c_after,committed,migrated,balance,cut_score\n";
  for (const StepRecord &r : steps) {
    fmt::print(out, "{},{},{:.6f},{:.6f},{},{},{:.6f},{:.6f}\n", r.step,
               to_string(r.outcome.criterion), r.outcome.c_before, r.outcome.c_after,
               r.outcome.committed ? 1 : 0, r.outcome.migrated, r.balance, r.cut_score);
  }
}

void write_compare_csv(std::ostream &out, const std::vector<StrategySummary> &rows) {
  out << "strategy,edges,nodes,balance,cut_score\n";
  for (const StrategySummary &r : rows) {
    fmt::print(out, "{},{},{},{:.6f},{:.6f}\n", to_string(r.strategy), r.edges, r.nodes,
               r.balance, r.cut_score);
  }
}

namespace {

struct PreparedRun {
  LoadedInput input;
  std::vector<EdgeEvent> events;
  std::size_t capacity;
  std::filesystem::path out_dir;
};

PreparedRun prepare(const ExperimentSpec &spec) {
  if (spec.k < 1) {
    throw std::invalid_argument("k must be at least 1");
  }
  PreparedRun run;
  run.input = load_input(spec);
  run.events = stream(run.input.edges, StreamOrder{spec.seed});
  run.capacity = spec.capacity.value_or(default_capacity(run.input.nodes, spec.k));
  run.out_dir = resolve_output_dir(spec);
  std::filesystem::create_directories(run.out_dir);
  return run;
}

ExperimentResult run_single(const ExperimentSpec &spec, Strategy strategy,
                            const PreparedRun &prepared) {
  ExperimentResult result;
  RunOptions options{.k = spec.k,
                     .capacity = prepared.capacity,
                     .sample_every = spec.sample_every,
                     .hash = make_hash(spec),
                     .seed = spec.seed,
                     .on_sample = {}};
  std::vector<double> dependencies;
  if (spec.workload) {
    validate(*spec.workload);
    const std::uint64_t base = derive_seed(spec.seed, seed_label::kApplicationBatch);
    options.on_sample = [&](const PartitionedGraph &g) {
      dependencies.push_back(run_request_batch(g, *spec.workload,
                                               application_batch_size(g.node_count()),
                                               derive_seed(base, dependencies.size())));
    };
  }
  const StreamRun run = run_stream(prepared.events, strategy, options);
  for (std::size_t i = 0; i < run.samples.size(); ++i) {
    result.curve.push_back(
        {run.samples[i], spec.workload ? std::optional(dependencies[i]) : std::nullopt});
  }
  result.summary = {strategy, run.graph.edge_count(), run.graph.node_count(),
                    load_balance(run.graph), cut_score(run.graph)};
  return result;
}

} // namespace

ExperimentResult run_experiment(const ExperimentSpec &spec) {
  const PreparedRun prepared = prepare(spec);
  ExperimentResult result;

  if (spec.optimizer) {
    if (spec.strategy != Strategy::kStreamGreedy) {
      throw std::invalid_argument("the optimizer runs on top of stream-greedy only");
    }
    OptimizedRunOptions options{.k = spec.k,
                                .capacity = prepared.capacity,
                                .optimizer = spec.optimizer,
                                .schedule = *spec.optimizer,
                                .walks = spec.workload.value_or(WalkConfig{}),
                                .seed = spec.seed};
    const OptimizedRunReport report = run_optimized_stream(prepared.events, options);
    for (const TimelineSample &s : report.timeline) {
      result.curve.push_back({s.metrics, s.mean_dependencies});
    }
    result.steps = report.steps;
    result.summary = {Strategy::kStreamGreedy, report.graph.edge_count(),
                      report.graph.node_count(), load_balance(report.graph),
                      cut_score(report.graph)};
  } else {
    result = run_single(spec, spec.strategy, prepared);
  }

  const auto metrics_path = prepared.out_dir / "metrics.csv";
  {
    auto out = open_output(metrics_path);
    write_metrics_csv(out, result.curve);
  }
  result.artifacts.push_back(metrics_path);
  if (spec.optimizer) {
    const auto outcomes_path = prepared.out_dir / "outcomes.csv";
    auto out = open_output(outcomes_path);
    write_outcomes_csv(out, result.steps);
    result.artifacts.push_back(outcomes_path);
  }
  const auto id_map_path = prepared.out_dir / "id_map.csv";
  {
    auto out = open_output(id_map_path);
    write_id_map(out, prepared.input.external_ids);
  }
  result.artifacts.push_back(id_map_path);
  return result;
}

std::vector<StrategySummary> compare_strategies(const ExperimentSpec &spec) {
  const PreparedRun prepared = prepare(spec);
  std::vector<StrategySummary> rows;
  for (const Strategy strategy :
       {Strategy::kRandom, Strategy::kStreamGreedy, Strategy::kBaseline}) {
    const ExperimentResult result = run_single(spec, strategy, prepared);
    auto out = open_output(prepared.out_dir / fmt::format("metrics_{}.csv", to_string(strategy)));
    write_metrics_csv(out, result.curve);
    rows.push_back(result.summary);
  }
  auto out = open_output(prepared.out_dir / "compare.csv");
  write_compare_csv(out, rows);
  return rows;
}

std::vector<ConfigurationSample> sample_configurations(const ExperimentSpec &spec,
                                                       std::size_t trials) {
  if (trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  const LoadedInput input = load_input(spec);
  const auto samples = sample_random_partitions(input.edges, spec.k, trials, spec.seed);
  const auto out_dir = resolve_output_dir(spec);
  std::filesystem::create_directories(out_dir);
  auto out = open_output(out_dir / "configs.csv");
  out << "trial,balance,cut_score\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    fmt::print(out, "{},{:.6f},{:.6f}\n", i, samples[i].balance, samples[i].cut_score);
  }
  return samples;
}

} // namespace streampart
