/*******************************************************************************
 * Streamed-graph state shared by partitioners, the optimizer and the workload
 * simulator: k partitions holding adjacency lists, the node -> partition
 * table, and the load-balance / cut metrics.
 *
 * Partitions are indexed 0..k-1. Human-facing output (CSV, CLI) prints them
 * 1-based.
 *
 * @file:   partitioned_graph.h
 ******************************************************************************/
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace streampart {

using NodeId = std::uint32_t;
using PartitionId = std::uint32_t;
using EdgeCount = std::uint64_t;

inline constexpr PartitionId kUnassigned = std::numeric_limits<PartitionId>::max();
inline constexpr std::size_t kUnboundedCapacity = std::numeric_limits<std::size_t>::max();

/// Undirected edge; also the unit of the input stream.
struct EdgeEvent {
  NodeId a;
  NodeId b;

  /// Endpoint-order-independent key; (a,b) and (b,a) map to the same value.
  [[nodiscard]] std::uint64_t key() const {
    const auto [lo, hi] = std::minmax(a, b);
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
  }

  [[nodiscard]] EdgeEvent canonical() const { return a < b ? *this : EdgeEvent{b, a}; }

  friend bool operator==(const EdgeEvent &, const EdgeEvent &) = default;
};

using Edge = EdgeEvent;
using EdgeList = std::vector<Edge>;

/// Thrown when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct MetricsSample {
  EdgeCount edges_seen = 0;
  double balance = 1.0;
  double cut_score = 1.0;
};

/// Capacity used when the expected node count is known: ceil(1.2 * n / k).
std::size_t default_capacity(std::size_t expected_nodes, PartitionId k);

class PartitionedGraph {
public:
  PartitionedGraph(PartitionId k, std::size_t capacity = kUnboundedCapacity);

  [[nodiscard]] PartitionId k() const { return static_cast<PartitionId>(_members.size()); }
  [[nodiscard]] std::size_t capacity() const { return _capacity; }
  [[nodiscard]] bool has_bounded_capacity() const { return _capacity != kUnboundedCapacity; }

  [[nodiscard]] bool is_assigned(NodeId v) const {
    return v < _assignment.size() && _assignment[v] != kUnassigned;
  }
  /// Partition of an assigned node; throws ContractViolation otherwise.
  [[nodiscard]] PartitionId partition_of(NodeId v) const;

  /// Registers a previously unseen node on partition p. Capacity is not
  /// checked here; placement strategies enforce it.
  void assign(NodeId v, PartitionId p);

  /// Records edge (a,b) in both endpoints' adjacency lists. Returns false
  /// when the edge was already present (duplicates are ignored) or a == b.
  bool add_link(NodeId a, NodeId b);

  /// Moves v (with its adjacency list) to target. No-op when v already
  /// lives there.
  void migrate(NodeId v, PartitionId target);

  [[nodiscard]] std::size_t partition_size(PartitionId p) const { return _members.at(p).size(); }
  [[nodiscard]] bool is_full(PartitionId p) const { return partition_size(p) >= _capacity; }
  [[nodiscard]] std::span<const NodeId> members(PartitionId p) const { return _members.at(p); }
  /// Lowest-index partition among those with the fewest nodes.
  [[nodiscard]] PartitionId least_occupied() const;

  [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const;
  [[nodiscard]] std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  [[nodiscard]] bool has_edge(NodeId a, NodeId b) const {
    return _edge_keys.contains(EdgeEvent{a, b}.key());
  }

  /// Number of distinct assigned nodes.
  [[nodiscard]] std::size_t node_count() const { return _node_count; }
  /// One past the largest node id ever assigned.
  [[nodiscard]] std::size_t id_bound() const { return _assignment.size(); }
  [[nodiscard]] EdgeCount edge_count() const { return _edge_count; }
  [[nodiscard]] EdgeCount cut_edge_count() const { return _cut_edges; }

  /// Neighbors of v that live on partition p.
  [[nodiscard]] std::size_t neighbors_in(NodeId v, PartitionId p) const;
  /// Per-partition neighbor histogram of v (size k).
  [[nodiscard]] std::vector<std::size_t> neighbor_histogram(NodeId v) const;

  /// Recomputes the crossing-edge count with a full O(|E|) scan.
  [[nodiscard]] EdgeCount recount_cut_edges() const;

  /// All stored edges with a < b, sorted.
  [[nodiscard]] EdgeList edges() const;

  friend bool operator==(const PartitionedGraph &, const PartitionedGraph &) = default;

private:
  void ensure_slot(NodeId v);

  std::size_t _capacity;
  std::vector<std::vector<NodeId>> _members;   // per partition
  std::vector<std::vector<NodeId>> _adjacency; // per node
  std::vector<PartitionId> _assignment;        // per node
  std::vector<std::uint32_t> _member_pos;      // index of node in _members[p]
  std::unordered_set<std::uint64_t> _edge_keys;
  std::size_t _node_count = 0;
  EdgeCount _edge_count = 0;
  EdgeCount _cut_edges = 0;
};

/// min_i |P(i)| / max_i |P(i)|; 1 for an empty system.
double load_balance(const PartitionedGraph &g);

/// 1 - crossing / total edges; 1 when no edge is stored.
double cut_score(const PartitionedGraph &g);

/// Fraction of v's neighbors sharing its partition (lower is worse).
/// Isolated nodes score 1.
double badness(NodeId v, const PartitionedGraph &g);

MetricsSample sample_metrics(const PartitionedGraph &g);

} // namespace streampart
