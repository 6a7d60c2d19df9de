/*******************************************************************************
 * Periodic repartitioning.
 *
 * Two migration heuristics pick the worst nodes by badness and move them:
 * improve_cut sends each to the partition holding most of its neighbors,
 * improve_balance drains the most loaded partitions using the capacity
 * weighted greedy score. The blind hill-climbing controller flips a biased
 * coin between them, measures compute time before and after, and keeps or
 * rolls back the new layout.
 *
 * @file:   optimizer.h
 ******************************************************************************/
#pragma once

#include "streampart/partitioned_graph.h"
#include "streampart/partitioners.h"
#include "streampart/random.h"
#include "streampart/workload.h"

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace streampart {

enum class Criterion { kCut, kBalance };

std::string_view to_string(Criterion criterion);

enum class SelectionScope { kAllPartitions, kMostLoaded };

struct OptimizerConfig {
  double epsilon = 0.01;        // tolerated relative degradation before rollback
  double topk_fraction = 0.10;  // share of each selected partition to migrate
  double trigger_growth = 0.05; // relative edge growth between triggers
  double criterion_bias = 0.5;  // probability of picking the cut criterion
  EdgeCount first_trigger = 100;
  // Steps per trigger; a trigger also ends after two consecutive rollbacks.
  std::uint32_t max_steps_per_trigger = 1;
};

void validate(const OptimizerConfig &cfg);

/// Per partition in scope, the ceil(fraction * |P(i)|) nodes of lowest
/// badness (ties by ascending id). kMostLoaded restricts the scope to
/// partitions strictly larger than the mean partition size.
std::vector<NodeId> select_worst(const PartitionedGraph &g, double fraction,
                                 SelectionScope scope);

/// Partition holding most of v's neighbors. v's current partition wins any
/// tie it is part of, otherwise the lowest index does.
PartitionId most_neighbors_partition(NodeId v, const PartitionedGraph &g);

/// Capacity used by the balance heuristic: the graph's own bound, or
/// ceil(1.2 * |V| / k) when it has none.
double balance_capacity(const PartitionedGraph &g);

/// Returns the number of nodes that changed partition.
std::size_t improve_cut(PartitionedGraph &g, const OptimizerConfig &cfg);
std::size_t improve_balance(PartitionedGraph &g, const OptimizerConfig &cfg);

/// Complete copy of the partition layout.
struct Snapshot {
  PartitionedGraph state;
};

/// The partition hosts plus the partitioner's ingestion path, with the
/// snapshot / commit / rollback / buffer / flush primitives the controller
/// needs. Single writer; no internal locking.
class StreamingSystem {
public:
  StreamingSystem(PartitionedGraph graph, EdgePlacer placer);

  /// Places the event now, or queues it while buffering.
  void ingest(const EdgeEvent &e);

  void buffer() { _buffering = true; }
  /// Replays queued events in arrival order and stops buffering.
  void flush_buffer();
  [[nodiscard]] bool is_buffering() const { return _buffering; }
  [[nodiscard]] std::size_t buffered_events() const { return _queue.size(); }

  void snapshot() { _snapshot = Snapshot{_graph}; }
  /// Keeps the current layout and frees the snapshot.
  void commit() { _snapshot.reset(); }
  /// Restores the snapshot taken last. Throws if there is none.
  void rollback();
  [[nodiscard]] bool has_snapshot() const { return _snapshot.has_value(); }

  [[nodiscard]] PartitionedGraph &graph() { return _graph; }
  [[nodiscard]] const PartitionedGraph &graph() const { return _graph; }

private:
  PartitionedGraph _graph;
  EdgePlacer _placer;
  bool _buffering = false;
  std::deque<EdgeEvent> _queue;
  std::optional<Snapshot> _snapshot;
};

/// Application feedback: average compute time of the current layout.
using ComputeTimeSource = std::function<double(const PartitionedGraph &)>;

struct OptimizationOutcome {
  Criterion criterion;
  double c_before;
  double c_after;
  bool committed;
  std::size_t migrated;
};

/// Commit rule: keep the new layout unless c_after > c_before + eps * c_before.
inline bool accept_step(double c_before, double c_after, double epsilon) {
  return !(c_after > c_before + epsilon * c_before);
}

/// One blind hill-climbing step: measure, snapshot, buffer, run the coin's
/// heuristic, measure again, commit or roll back, flush the buffer.
/// A failing feedback source after migration triggers a rollback before the
/// error propagates.
OptimizationOutcome blind_hill_climb_step(StreamingSystem &system, const OptimizerConfig &cfg,
                                          const ComputeTimeSource &compute_time, Rng &coin);

/// Next trigger point after a trigger at `edges`: ceil(edges * (1 + growth)),
/// and always at least edges + 1.
EdgeCount next_trigger(EdgeCount edges, double growth);

struct OptimizedRunOptions {
  PartitionId k = 4;
  std::size_t capacity = kUnboundedCapacity;
  std::optional<OptimizerConfig> optimizer = OptimizerConfig{}; // nullopt: measure only
  OptimizerConfig schedule{}; // trigger policy used when optimizer is off
  WalkConfig walks{};
  std::uint64_t seed = 0;
};

struct TimelineSample {
  MetricsSample metrics;
  double mean_dependencies;
};

struct StepRecord {
  std::size_t step;
  EdgeCount edges_seen;
  OptimizationOutcome outcome;
  double balance;
  double cut_score;
};

struct OptimizedRunReport {
  PartitionedGraph graph;
  std::vector<TimelineSample> timeline;
  std::vector<StepRecord> steps;
  std::vector<EdgeCount> triggers;
};

/// Batch size of the generic request batch used as compute-time feedback:
/// max(50, 1% of nodes).
std::size_t compute_batch_size(std::size_t nodes);
/// Application request batch issued at every trigger: max(1, ceil(1% of nodes)).
std::size_t application_batch_size(std::size_t nodes);

/// Streams events through stream-greedy. At every growth trigger it runs an
/// application request batch (logged with the metrics), then, when the
/// optimizer is on, up to max_steps_per_trigger blind hill-climbing steps fed
/// by a fixed seeded request batch.
OptimizedRunReport run_optimized_stream(std::span<const EdgeEvent> events,
                                        const OptimizedRunOptions &options);

} // namespace streampart
