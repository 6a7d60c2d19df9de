/*******************************************************************************
 * @file:   optimizer.cc
 ******************************************************************************/
#include "streampart/optimizer.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace streampart {

std::string_view to_string(Criterion criterion) {
  return criterion == Criterion::kCut ? "cut" : "balance";
}

void validate(const OptimizerConfig &cfg) {
  auto in_unit = [](double x) { return x > 0.0 && x <= 1.0; };
  if (!in_unit(cfg.topk_fraction) || !in_unit(cfg.trigger_growth)) {
    throw std::invalid_argument("optimizer: fractions must lie in (0,1]");
  }
  if (!(cfg.criterion_bias >= 0.0 && cfg.criterion_bias <= 1.0)) {
    throw std::invalid_argument("optimizer: criterion_bias must lie in [0,1]");
  }
  if (!(cfg.epsilon >= 0.0)) {
    throw std::invalid_argument("optimizer: epsilon must be nonnegative");
  }
  if (cfg.max_steps_per_trigger < 1) {
    throw std::invalid_argument("optimizer: max_steps_per_trigger must be at least 1");
  }
}

std::vector<NodeId> select_worst(const PartitionedGraph &g, double fraction,
                                 SelectionScope scope) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("select_worst: fraction must lie in (0,1]");
  }
  const double mean = static_cast<double>(g.node_count()) / g.k();
  std::vector<NodeId> selected;
  std::vector<std::pair<double, NodeId>> ranked;
  for (PartitionId p = 0; p < g.k(); ++p) {
    const auto members = g.members(p);
    if (members.empty()) {
      continue;
    }
    if (scope == SelectionScope::kMostLoaded && !(static_cast<double>(members.size()) > mean)) {
      continue;
    }
    ranked.clear();
    for (const NodeId v : members) {
      ranked.emplace_back(badness(v, g), v);
    }
    const auto take = std::min(
        members.size(),
        static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(members.size()) - 1e-9)));
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(take),
                      ranked.end());
    for (std::size_t i = 0; i < take; ++i) {
      selected.push_back(ranked[i].second);
    }
  }
  return selected;
}

PartitionId most_neighbors_partition(NodeId v, const PartitionedGraph &g) {
  const PartitionId current = g.partition_of(v);
  const auto histogram = g.neighbor_histogram(v);
  const std::size_t best = *std::max_element(histogram.begin(), histogram.end());
  if (histogram[current] == best) {
    return current;
  }
  return static_cast<PartitionId>(
      std::find(histogram.begin(), histogram.end(), best) - histogram.begin());
}

double balance_capacity(const PartitionedGraph &g) {
  if (g.has_bounded_capacity()) {
    return static_cast<double>(g.capacity());
  }
  return static_cast<double>(default_capacity(std::max<std::size_t>(g.node_count(), 1), g.k()));
}

std::size_t improve_cut(PartitionedGraph &g, const OptimizerConfig &cfg) {
  std::size_t migrated = 0;
  for (const NodeId v : select_worst(g, cfg.topk_fraction, SelectionScope::kAllPartitions)) {
    const PartitionId target = most_neighbors_partition(v, g);
    if (target != g.partition_of(v)) {
      g.migrate(v, target);
      ++migrated;
    }
  }
  return migrated;
}

std::size_t improve_balance(PartitionedGraph &g, const OptimizerConfig &cfg) {
  const double capacity = balance_capacity(g);
  std::size_t migrated = 0;
  for (const NodeId v : select_worst(g, cfg.topk_fraction, SelectionScope::kMostLoaded)) {
    const PartitionId current = g.partition_of(v);
    const auto histogram = g.neighbor_histogram(v);
    const auto scores = weighted_greedy_scores(histogram, g, capacity, current);
    const PartitionId target = weighted_greedy_choice(scores, g, current);
    if (target != current) {
      g.migrate(v, target);
      ++migrated;
    }
  }
  return migrated;
}

StreamingSystem::StreamingSystem(PartitionedGraph graph, EdgePlacer placer)
    : _graph(std::move(graph)),
      _placer(std::move(placer)) {}

void StreamingSystem::ingest(const EdgeEvent &e) {
  if (_buffering) {
    _queue.push_back(e);
  } else {
    _placer(e, _graph);
  }
}

void StreamingSystem::flush_buffer() {
  _buffering = false;
  while (!_queue.empty()) {
    const EdgeEvent e = _queue.front();
    _queue.pop_front();
    _placer(e, _graph);
  }
}

void StreamingSystem::rollback() {
  if (!_snapshot) {
    throw ContractViolation("rollback without a snapshot");
  }
  _graph = std::move(_snapshot->state);
  _snapshot.reset();
}

OptimizationOutcome blind_hill_climb_step(StreamingSystem &system, const OptimizerConfig &cfg,
                                          const ComputeTimeSource &compute_time, Rng &coin) {
  const double c_before = compute_time(system.graph());
  system.snapshot();
  system.buffer();

  const Criterion criterion = coin.bernoulli(cfg.criterion_bias) ? Criterion::kCut
                                                                 : Criterion::kBalance;
  const std::size_t migrated = criterion == Criterion::kCut ? improve_cut(system.graph(), cfg)
                                                            : improve_balance(system.graph(), cfg);

  double c_after = 0.0;
  try {
    c_after = compute_time(system.graph());
  } catch (...) {
    system.rollback();
    system.flush_buffer();
    throw;
  }

  const bool committed = accept_step(c_before, c_after, cfg.epsilon);
  if (committed) {
    system.commit();
  } else {
    system.rollback();
  }
  system.flush_buffer();
  return {criterion, c_before, c_after, committed, migrated};
}

EdgeCount next_trigger(EdgeCount edges, double growth) {
  const double raw = std::ceil(static_cast<double>(edges) * (1.0 + growth) - 1e-9);
  return std::max<EdgeCount>(edges + 1, static_cast<EdgeCount>(raw));
}

std::size_t compute_batch_size(std::size_t nodes) {
  return std::max<std::size_t>(50, nodes / 100);
}

std::size_t application_batch_size(std::size_t nodes) {
  return std::max<std::size_t>(1, (nodes + 99) / 100);
}

OptimizedRunReport run_optimized_stream(std::span<const EdgeEvent> events,
                                        const OptimizedRunOptions &options) {
  const OptimizerConfig &schedule = options.optimizer ? *options.optimizer : options.schedule;
  validate(schedule);
  validate(options.walks);

  StreamingSystem system(PartitionedGraph(options.k, options.capacity),
                         make_edge_placer(Strategy::kStreamGreedy));
  OptimizedRunReport report{PartitionedGraph(options.k, options.capacity), {}, {}, {}};
  Rng coin(derive_seed(options.seed, seed_label::kCoin));

  EdgeCount trigger_at = std::max<EdgeCount>(1, schedule.first_trigger);
  std::size_t trigger_index = 0;
  for (const EdgeEvent &e : events) {
    if (e.a == e.b) {
      continue;
    }
    system.ingest(e);
    const EdgeCount edges = system.graph().edge_count();
    if (edges < trigger_at) {
      continue;
    }
    report.triggers.push_back(edges);
    trigger_at = next_trigger(edges, schedule.trigger_growth);

    const PartitionedGraph &g = system.graph();
    const std::uint64_t app_seed =
        derive_seed(derive_seed(options.seed, seed_label::kApplicationBatch), trigger_index);
    const double app_deps =
        run_request_batch(g, options.walks, application_batch_size(g.node_count()), app_seed);
    report.timeline.push_back({sample_metrics(g), app_deps});

    if (options.optimizer) {
      const std::uint64_t batch_seed =
          derive_seed(derive_seed(options.seed, seed_label::kComputeBatch), trigger_index);
      const std::size_t batch = compute_batch_size(g.node_count());
      const ComputeTimeSource feedback = [&](const PartitionedGraph &layout) {
        return run_request_batch(layout, options.walks, batch, batch_seed);
      };
      std::uint32_t consecutive_rollbacks = 0;
      for (std::uint32_t s = 0; s < options.optimizer->max_steps_per_trigger; ++s) {
        const auto outcome = blind_hill_climb_step(system, *options.optimizer, feedback, coin);
        report.steps.push_back({report.steps.size(), edges, outcome,
                                load_balance(system.graph()), cut_score(system.graph())});
        consecutive_rollbacks = outcome.committed ? 0 : consecutive_rollbacks + 1;
        if (consecutive_rollbacks >= 2) {
          break;
        }
      }
    }
    ++trigger_index;
  }

  const PartitionedGraph &g = system.graph();
  if (g.node_count() > 0 &&
      (report.timeline.empty() || report.timeline.back().metrics.edges_seen != g.edge_count())) {
    const std::uint64_t app_seed =
        derive_seed(derive_seed(options.seed, seed_label::kApplicationBatch), trigger_index);
    report.timeline.push_back(
        {sample_metrics(g),
         run_request_batch(g, options.walks, application_batch_size(g.node_count()), app_seed)});
  }
  report.graph = system.graph();
  return report;
}

} // namespace streampart
