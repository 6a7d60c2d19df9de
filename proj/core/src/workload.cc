/*******************************************************************************
 * @file:   workload.cc
 ******************************************************************************/
#include "streampart/workload.h"

#include <algorithm>
#include <stdexcept>

namespace streampart {

void validate(const WalkConfig &cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    throw std::invalid_argument("walk config: alpha must lie in (0,1)");
  }
  if (cfg.walks_per_request < 1) {
    throw std::invalid_argument("walk config: walks_per_request must be at least 1");
  }
}

namespace {

template <typename OnStep>
std::uint64_t walk(NodeId start, const PartitionedGraph &g, const WalkConfig &cfg, Rng &rng,
                   OnStep &&on_step) {
  std::uint64_t dependencies = 0;
  NodeId current = start;
  PartitionId current_part = g.partition_of(start);
  for (std::uint32_t step = 0; step < cfg.max_steps; ++step) {
    if (step >= cfg.min_hops && !rng.bernoulli(cfg.alpha)) {
      break;
    }
    const auto nbrs = g.neighbors(current);
    if (nbrs.empty()) {
      break;
    }
    const NodeId next = nbrs[rng.below(nbrs.size())];
    const PartitionId next_part = g.partition_of(next);
    dependencies += (next_part != current_part);
    current = next;
    current_part = next_part;
    on_step(next);
  }
  return dependencies;
}

Rng walk_rng(std::uint64_t request_seed, std::uint32_t index) {
  return Rng(derive_seed(request_seed, index));
}

} // namespace

WalkResult random_walk(NodeId start, const PartitionedGraph &g, const WalkConfig &cfg, Rng &rng) {
  validate(cfg);
  WalkResult result;
  result.dependencies = walk(start, g, cfg, rng, [&](NodeId v) { result.path.push_back(v); });
  return result;
}

std::vector<std::pair<NodeId, std::uint64_t>> RequestResult::top(std::size_t count) const {
  std::vector<std::pair<NodeId, std::uint64_t>> ranked;
  ranked.reserve(visit_counts.size());
  for (const auto &[node, visits] : visit_counts) {
    if (node != center) {
      ranked.emplace_back(node, visits);
    }
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto &x, const auto &y) {
    return x.second != y.second ? x.second > y.second : x.first < y.first;
  });
  if (ranked.size() > count) {
    ranked.resize(count);
  }
  return ranked;
}

RequestResult serve_request(NodeId center, const PartitionedGraph &g, const WalkConfig &cfg,
                            std::uint64_t request_seed) {
  validate(cfg);
  RequestResult result{center, 0, 0, {}};
  for (std::uint32_t i = 0; i < cfg.walks_per_request; ++i) {
    Rng rng = walk_rng(request_seed, i);
    result.dependencies += walk(center, g, cfg, rng, [&](NodeId v) {
      ++result.visit_counts[v];
      ++result.steps;
    });
  }
  return result;
}

std::uint64_t request_dependencies(NodeId center, const PartitionedGraph &g,
                                   const WalkConfig &cfg, std::uint64_t request_seed) {
  validate(cfg);
  std::uint64_t dependencies = 0;
  for (std::uint32_t i = 0; i < cfg.walks_per_request; ++i) {
    Rng rng = walk_rng(request_seed, i);
    dependencies += walk(center, g, cfg, rng, [](NodeId) {});
  }
  return dependencies;
}

double run_request_batch(const PartitionedGraph &g, const WalkConfig &cfg,
                         std::size_t batch_size, std::uint64_t batch_seed) {
  if (batch_size < 1) {
    throw std::invalid_argument("request batch: batch_size must be at least 1");
  }
  if (g.node_count() == 0) {
    throw std::invalid_argument("request batch: graph is empty");
  }
  std::vector<NodeId> nodes;
  nodes.reserve(g.node_count());
  for (NodeId v = 0; v < g.id_bound(); ++v) {
    if (g.is_assigned(v)) {
      nodes.push_back(v);
    }
  }
  Rng centers(batch_seed);
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < batch_size; ++r) {
    const NodeId center = nodes[centers.below(nodes.size())];
    total += request_dependencies(center, g, cfg, derive_seed(batch_seed, r + 1));
  }
  return static_cast<double>(total) / static_cast<double>(batch_size);
}

} // namespace streampart
