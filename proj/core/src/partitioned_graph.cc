/*******************************************************************************
 * @file:   partitioned_graph.cc
 ******************************************************************************/
#include "streampart/partitioned_graph.h"

#include <algorithm>
#include <cmath>

namespace streampart {

std::size_t default_capacity(std::size_t expected_nodes, PartitionId k) {
  if (k == 0) {
    throw ContractViolation("partition count must be positive");
  }
  const double raw = 1.2 * static_cast<double>(expected_nodes) / k;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(raw - 1e-9)));
}

PartitionedGraph::PartitionedGraph(PartitionId k, std::size_t capacity)
    : _capacity(capacity),
      _members(k) {
  if (k == 0) {
    throw ContractViolation("partition count must be positive");
  }
  if (capacity == 0) {
    throw ContractViolation("capacity must be positive");
  }
}

PartitionId PartitionedGraph::partition_of(NodeId v) const {
  if (!is_assigned(v)) {
    throw ContractViolation("node " + std::to_string(v) + " has no assignment");
  }
  return _assignment[v];
}

void PartitionedGraph::ensure_slot(NodeId v) {
  if (v >= _assignment.size()) {
    const std::size_t size = static_cast<std::size_t>(v) + 1;
    _assignment.resize(size, kUnassigned);
    _adjacency.resize(size);
    _member_pos.resize(size, 0);
  }
}

void PartitionedGraph::assign(NodeId v, PartitionId p) {
  if (p >= k()) {
    throw ContractViolation("partition " + std::to_string(p) + " out of range");
  }
  if (is_assigned(v)) {
    throw ContractViolation("node " + std::to_string(v) + " is already assigned");
  }
  ensure_slot(v);
  _assignment[v] = p;
  _member_pos[v] = static_cast<std::uint32_t>(_members[p].size());
  _members[p].push_back(v);
  ++_node_count;
}

bool PartitionedGraph::add_link(NodeId a, NodeId b) {
  const PartitionId pa = partition_of(a);
  const PartitionId pb = partition_of(b);
  if (a == b) {
    return false;
  }
  if (!_edge_keys.insert(EdgeEvent{a, b}.key()).second) {
    return false;
  }
  _adjacency[a].push_back(b);
  _adjacency[b].push_back(a);
  ++_edge_count;
  if (pa != pb) {
    ++_cut_edges;
  }
  return true;
}

void PartitionedGraph::migrate(NodeId v, PartitionId target) {
  const PartitionId source = partition_of(v);
  if (target >= k()) {
    throw ContractViolation("partition " + std::to_string(target) + " out of range");
  }
  if (source == target) {
    return;
  }

  for (const NodeId u : _adjacency[v]) {
    const PartitionId pu = _assignment[u];
    _cut_edges -= (pu != source);
    _cut_edges += (pu != target);
  }

  // swap-and-pop removal from the source member list
  auto &from = _members[source];
  const std::uint32_t pos = _member_pos[v];
  const NodeId last = from.back();
  from[pos] = last;
  _member_pos[last] = pos;
  from.pop_back();

  _member_pos[v] = static_cast<std::uint32_t>(_members[target].size());
  _members[target].push_back(v);
  _assignment[v] = target;
}

PartitionId PartitionedGraph::least_occupied() const {
  PartitionId best = 0;
  for (PartitionId p = 1; p < k(); ++p) {
    if (_members[p].size() < _members[best].size()) {
      best = p;
    }
  }
  return best;
}

std::span<const NodeId> PartitionedGraph::neighbors(NodeId v) const {
  if (!is_assigned(v)) {
    throw ContractViolation("node " + std::to_string(v) + " has no assignment");
  }
  return _adjacency[v];
}

std::size_t PartitionedGraph::neighbors_in(NodeId v, PartitionId p) const {
  std::size_t count = 0;
  for (const NodeId u : neighbors(v)) {
    count += (_assignment[u] == p);
  }
  return count;
}

std::vector<std::size_t> PartitionedGraph::neighbor_histogram(NodeId v) const {
  std::vector<std::size_t> histogram(k(), 0);
  for (const NodeId u : neighbors(v)) {
    ++histogram[_assignment[u]];
  }
  return histogram;
}

EdgeCount PartitionedGraph::recount_cut_edges() const {
  EdgeCount crossing = 0;
  for (NodeId v = 0; v < _adjacency.size(); ++v) {
    for (const NodeId u : _adjacency[v]) {
      if (v < u && _assignment[v] != _assignment[u]) {
        ++crossing;
      }
    }
  }
  return crossing;
}

EdgeList PartitionedGraph::edges() const {
  EdgeList result;
  result.reserve(_edge_count);
  for (NodeId v = 0; v < _adjacency.size(); ++v) {
    for (const NodeId u : _adjacency[v]) {
      if (v < u) {
        result.push_back({v, u});
      }
    }
  }
  std::sort(result.begin(), result.end(), [](const Edge &x, const Edge &y) {
    return x.key() < y.key();
  });
  return result;
}

double load_balance(const PartitionedGraph &g) {
  std::size_t lo = g.partition_size(0);
  std::size_t hi = lo;
  for (PartitionId p = 1; p < g.k(); ++p) {
    lo = std::min(lo, g.partition_size(p));
    hi = std::max(hi, g.partition_size(p));
  }
  if (hi == 0) {
    return 1.0;
  }
  return static_cast<double>(lo) / static_cast<double>(hi);
}

double cut_score(const PartitionedGraph &g) {
  if (g.edge_count() == 0) {
    return 1.0;
  }
  return 1.0 - static_cast<double>(g.cut_edge_count()) / static_cast<double>(g.edge_count());
}

double badness(NodeId v, const PartitionedGraph &g) {
  const std::size_t degree = g.degree(v);
  if (degree == 0) {
    return 1.0;
  }
  return static_cast<double>(g.neighbors_in(v, g.partition_of(v))) / static_cast<double>(degree);
}

MetricsSample sample_metrics(const PartitionedGraph &g) {
  return {g.edge_count(), load_balance(g), cut_score(g)};
}

} // namespace streampart
