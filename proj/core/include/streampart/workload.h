/*******************************************************************************
 * Random-walk recommendation workload. A request launches damping random
 * walks from a center node; every step that crosses a partition boundary is
 * one dependency (a remote fetch). The mean dependency count of a request
 * batch is the compute-time signal the optimizer reacts to.
 *
 * @file:   workload.h
 ******************************************************************************/
#pragma once

#include "streampart/partitioned_graph.h"
#include "streampart/random.h"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace streampart {

struct WalkConfig {
  std::uint32_t walks_per_request = 1000;
  double alpha = 0.9;          // continuation probability
  std::uint32_t min_hops = 3;  // termination suppressed for the first min_hops steps
  std::uint32_t max_steps = 10000;
  std::uint64_t seed = 0;
};

void validate(const WalkConfig &cfg);

struct WalkResult {
  std::vector<NodeId> path; // visited nodes after the start, in order
  std::uint64_t dependencies = 0;
};

/// One damping walk. A start node without neighbors yields an empty walk.
WalkResult random_walk(NodeId start, const PartitionedGraph &g, const WalkConfig &cfg, Rng &rng);

struct RequestResult {
  NodeId center;
  std::uint64_t dependencies = 0;
  std::uint64_t steps = 0;
  std::unordered_map<NodeId, std::uint64_t> visit_counts;

  /// Most visited nodes other than the center, by count then id.
  [[nodiscard]] std::vector<std::pair<NodeId, std::uint64_t>> top(std::size_t count = 10) const;
};

/// Aggregates cfg.walks_per_request walks from center. Walk i draws from a
/// sub-seed of (request_seed, i).
RequestResult serve_request(NodeId center, const PartitionedGraph &g, const WalkConfig &cfg,
                            std::uint64_t request_seed);

/// Dependencies only; same walks as serve_request with identical seeds.
std::uint64_t request_dependencies(NodeId center, const PartitionedGraph &g,
                                   const WalkConfig &cfg, std::uint64_t request_seed);

/// Mean dependencies over batch_size requests whose centers are drawn
/// uniformly from the assigned nodes. Deterministic in (graph, cfg, batch_seed).
double run_request_batch(const PartitionedGraph &g, const WalkConfig &cfg,
                         std::size_t batch_size, std::uint64_t batch_seed);

} // namespace streampart
