/*******************************************************************************
 * Online placement strategies: hashing, stream-greedy (edge driven, no
 * lookahead) and the weighted deterministic greedy baseline (node driven,
 * full neighbor lists known in advance).
 *
 * @file:   partitioners.h
 ******************************************************************************/
#pragma once

#include "streampart/partitioned_graph.h"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace streampart {

enum class Strategy { kRandom, kStreamGreedy, kBaseline };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view name);

enum class PlacementReason { kExisting, kCoLocated, kLeastOccupied, kHash, kWeightedGreedy };

std::string_view to_string(PlacementReason reason);

struct PlacementDecision {
  NodeId node;
  PartitionId partition;
  PlacementReason reason;

  friend bool operator==(const PlacementDecision &, const PlacementDecision &) = default;
};

/// Thrown when a new node cannot be placed because every partition is full.
class CapacityExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Node -> partition hash used by the random strategy.
///  - kModulo: id mod k, the id itself being the pseudo-random key.
///  - kMix:    mix64(id ^ salt) mod k (SplitMix64 finalizer, see random.h).
enum class HashKind { kModulo, kMix };

struct NodeHash {
  HashKind kind = HashKind::kModulo;
  std::uint64_t salt = 0;

  [[nodiscard]] PartitionId operator()(NodeId v, PartitionId k) const;
};

/// Each previously unseen endpoint goes to hash(id) mod k; the edge is linked.
std::vector<PlacementDecision> place_random(const EdgeEvent &e, PartitionedGraph &g,
                                            const NodeHash &hash = {});

/// Stream-greedy:
///  - both endpoints known: link only;
///  - one known: the new endpoint joins its partner's partition unless full,
///    else the least occupied partition;
///  - none known: both join the least occupied partition.
/// Least-occupied ties go to the lowest index.
std::vector<PlacementDecision> place_stream_greedy(const EdgeEvent &e, PartitionedGraph &g);

/// Weighted deterministic greedy score |P(i) ∩ Γ(v)| * (1 - |P(i)| / C).
/// `exclude` (when set) is not counted in its own partition's size.
std::vector<double> weighted_greedy_scores(std::span<const std::size_t> neighbor_counts,
                                           const PartitionedGraph &g, double capacity,
                                           std::optional<PartitionId> exclude = std::nullopt);

/// Argmax of the scores; when no score is positive, or on ties, the least
/// occupied candidate wins, then the lowest index.
PartitionId weighted_greedy_choice(std::span<const double> scores, const PartitionedGraph &g,
                                   std::optional<PartitionId> exclude = std::nullopt);

/// Places v using its complete neighbor list; only already-placed neighbors
/// contribute to |P(i) ∩ Γ(v)|. Edges are not linked here.
PlacementDecision place_baseline(NodeId v, std::span<const NodeId> full_neighbors,
                                 PartitionedGraph &g);

/// Edge-driven placement function (random or stream-greedy).
using EdgePlacer = std::function<std::vector<PlacementDecision>(const EdgeEvent &,
                                                                PartitionedGraph &)>;

EdgePlacer make_edge_placer(Strategy strategy, const NodeHash &hash = {});

struct RunOptions {
  PartitionId k = 4;
  std::size_t capacity = kUnboundedCapacity;
  std::size_t sample_every = 0; // 0: only the final sample
  NodeHash hash{};
  std::uint64_t seed = 0; // baseline node order
  // Called with the live graph right after each sample is recorded.
  std::function<void(const PartitionedGraph &)> on_sample;
};

struct StreamRun {
  PartitionedGraph graph;
  std::vector<MetricsSample> samples;
};

/// Streams events through one strategy, sampling metrics every sample_every
/// ingested edges plus once at the end. Empty input yields no samples.
/// The baseline is fed node by node in a seeded random order, with each
/// node's neighbor list precomputed from the whole event set; an edge counts
/// as ingested once both endpoints are placed.
StreamRun run_stream(std::span<const EdgeEvent> events, Strategy strategy,
                     const RunOptions &options);

} // namespace streampart
