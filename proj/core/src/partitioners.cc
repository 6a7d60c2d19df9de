/*******************************************************************************
 * @file:   partitioners.cc
 ******************************************************************************/
#include "streampart/partitioners.h"

#include "streampart/random.h"

#include <algorithm>
#include <numeric>

namespace streampart {

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
  case Strategy::kRandom:
    return "random";
  case Strategy::kStreamGreedy:
    return "stream-greedy";
  case Strategy::kBaseline:
    return "baseline";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (const Strategy s : {Strategy::kRandom, Strategy::kStreamGreedy, Strategy::kBaseline}) {
    if (to_string(s) == name) {
      return s;
    }
  }
  return std::nullopt;
}

std::string_view to_string(PlacementReason reason) {
  switch (reason) {
  case PlacementReason::kExisting:
    return "existing";
  case PlacementReason::kCoLocated:
    return "co-located";
  case PlacementReason::kLeastOccupied:
    return "least-occupied";
  case PlacementReason::kHash:
    return "hash";
  case PlacementReason::kWeightedGreedy:
    return "weighted-greedy";
  }
  return "unknown";
}

PartitionId NodeHash::operator()(NodeId v, PartitionId k) const {
  switch (kind) {
  case HashKind::kModulo:
    return static_cast<PartitionId>((static_cast<std::uint64_t>(v) + salt) % k);
  case HashKind::kMix:
    return static_cast<PartitionId>(mix64(static_cast<std::uint64_t>(v) ^ salt) % k);
  }
  return 0;
}

std::vector<PlacementDecision> place_random(const EdgeEvent &e, PartitionedGraph &g,
                                            const NodeHash &hash) {
  std::vector<PlacementDecision> decisions;
  decisions.reserve(2);
  for (const NodeId v : {e.a, e.b}) {
    if (g.is_assigned(v)) {
      decisions.push_back({v, g.partition_of(v), PlacementReason::kExisting});
    } else {
      const PartitionId p = hash(v, g.k());
      g.assign(v, p);
      decisions.push_back({v, p, PlacementReason::kHash});
    }
  }
  g.add_link(e.a, e.b);
  return decisions;
}

namespace {

PartitionId least_occupied_with_room(const PartitionedGraph &g, NodeId v) {
  const PartitionId p = g.least_occupied();
  if (g.is_full(p)) {
    throw CapacityExhausted("all " + std::to_string(g.k()) +
                            " partitions are at capacity; cannot place node " +
                            std::to_string(v));
  }
  return p;
}

} // namespace

std::vector<PlacementDecision> place_stream_greedy(const EdgeEvent &e, PartitionedGraph &g) {
  const bool known_a = g.is_assigned(e.a);
  const bool known_b = g.is_assigned(e.b);
  std::vector<PlacementDecision> decisions;
  decisions.reserve(2);

  if (known_a && known_b) {
    decisions.push_back({e.a, g.partition_of(e.a), PlacementReason::kExisting});
    decisions.push_back({e.b, g.partition_of(e.b), PlacementReason::kExisting});
  } else if (known_a || known_b) {
    const NodeId known = known_a ? e.a : e.b;
    const NodeId fresh = known_a ? e.b : e.a;
    const PartitionId home = g.partition_of(known);
    decisions.push_back({known, home, PlacementReason::kExisting});
    if (!g.is_full(home)) {
      g.assign(fresh, home);
      decisions.push_back({fresh, home, PlacementReason::kCoLocated});
    } else {
      const PartitionId p = least_occupied_with_room(g, fresh);
      g.assign(fresh, p);
      decisions.push_back({fresh, p, PlacementReason::kLeastOccupied});
    }
  } else if (e.a == e.b) {
    const PartitionId p = least_occupied_with_room(g, e.a);
    g.assign(e.a, p);
    decisions.push_back({e.a, p, PlacementReason::kLeastOccupied});
  } else {
    // Both join the least occupied partition; if it only had one free slot
    // left, the second endpoint goes to the next least occupied one.
    const PartitionId p = least_occupied_with_room(g, e.a);
    g.assign(e.a, p);
    decisions.push_back({e.a, p, PlacementReason::kLeastOccupied});
    const PartitionId q = g.is_full(p) ? least_occupied_with_room(g, e.b) : p;
    g.assign(e.b, q);
    decisions.push_back({e.b, q, PlacementReason::kLeastOccupied});
  }
  g.add_link(e.a, e.b);
  return decisions;
}

std::vector<double> weighted_greedy_scores(std::span<const std::size_t> neighbor_counts,
                                           const PartitionedGraph &g, double capacity,
                                           std::optional<PartitionId> exclude) {
  std::vector<double> scores(g.k(), 0.0);
  for (PartitionId p = 0; p < g.k(); ++p) {
    double size = static_cast<double>(g.partition_size(p));
    if (exclude && *exclude == p) {
      size -= 1.0;
    }
    scores[p] = static_cast<double>(neighbor_counts[p]) * (1.0 - size / capacity);
  }
  return scores;
}

PartitionId weighted_greedy_choice(std::span<const double> scores, const PartitionedGraph &g,
                                   std::optional<PartitionId> exclude) {
  auto size_of = [&](PartitionId p) {
    const std::size_t size = g.partition_size(p);
    return (exclude && *exclude == p) ? size - 1 : size;
  };
  const double best = *std::max_element(scores.begin(), scores.end());
  const bool informative = best > 0.0;
  PartitionId choice = kUnassigned;
  for (PartitionId p = 0; p < g.k(); ++p) {
    if (informative && scores[p] != best) {
      continue;
    }
    if (choice == kUnassigned || size_of(p) < size_of(choice)) {
      choice = p;
    }
  }
  return choice;
}

PlacementDecision place_baseline(NodeId v, std::span<const NodeId> full_neighbors,
                                 PartitionedGraph &g) {
  if (g.is_assigned(v)) {
    return {v, g.partition_of(v), PlacementReason::kExisting};
  }
  std::vector<std::size_t> counts(g.k(), 0);
  for (const NodeId u : full_neighbors) {
    if (g.is_assigned(u)) {
      ++counts[g.partition_of(u)];
    }
  }
  const double capacity = g.has_bounded_capacity()
                              ? static_cast<double>(g.capacity())
                              : static_cast<double>(default_capacity(g.node_count() + 1, g.k()));
  const auto scores = weighted_greedy_scores(counts, g, capacity);
  const PartitionId p = weighted_greedy_choice(scores, g);
  const bool informative = *std::max_element(scores.begin(), scores.end()) > 0.0;
  g.assign(v, p);
  return {v, p, informative ? PlacementReason::kWeightedGreedy : PlacementReason::kLeastOccupied};
}

EdgePlacer make_edge_placer(Strategy strategy, const NodeHash &hash) {
  switch (strategy) {
  case Strategy::kRandom:
    return [hash](const EdgeEvent &e, PartitionedGraph &g) { return place_random(e, g, hash); };
  case Strategy::kStreamGreedy:
    return [](const EdgeEvent &e, PartitionedGraph &g) { return place_stream_greedy(e, g); };
  case Strategy::kBaseline:
    break;
  }
  throw std::invalid_argument("baseline is node driven and has no edge placer");
}

namespace {

void record(StreamRun &run, const RunOptions &options) {
  run.samples.push_back(sample_metrics(run.graph));
  if (options.on_sample) {
    options.on_sample(run.graph);
  }
}

StreamRun run_baseline(std::span<const EdgeEvent> events, const RunOptions &options) {
  StreamRun run{PartitionedGraph(options.k, options.capacity), {}};
  if (events.empty()) {
    return run;
  }

  EdgeList edges(events.begin(), events.end());
  const std::size_t bound = [&] {
    std::size_t b = 0;
    for (const Edge &e : edges) {
      b = std::max<std::size_t>(b, std::max(e.a, e.b) + std::size_t{1});
    }
    return b;
  }();
  std::vector<std::vector<NodeId>> full(bound);
  std::vector<bool> present(bound, false);
  for (const Edge &e : edges) {
    if (e.a == e.b) {
      continue;
    }
    full[e.a].push_back(e.b);
    full[e.b].push_back(e.a);
    present[e.a] = present[e.b] = true;
  }
  std::vector<NodeId> order;
  for (NodeId v = 0; v < bound; ++v) {
    if (present[v]) {
      order.push_back(v);
    }
  }
  Rng rng(derive_seed(options.seed, seed_label::kNodeOrder));
  shuffle(std::span<NodeId>(order), rng);

  PartitionedGraph &g = run.graph;
  EdgeCount next_sample = options.sample_every;
  for (const NodeId v : order) {
    place_baseline(v, full[v], g);
    for (const NodeId u : full[v]) {
      if (g.is_assigned(u)) {
        g.add_link(v, u);
      }
    }
    if (options.sample_every > 0 && g.edge_count() >= next_sample) {
      record(run, options);
      next_sample = (g.edge_count() / options.sample_every + 1) * options.sample_every;
    }
  }
  if (run.samples.empty() || run.samples.back().edges_seen != g.edge_count()) {
    record(run, options);
  }
  return run;
}

} // namespace

StreamRun run_stream(std::span<const EdgeEvent> events, Strategy strategy,
                     const RunOptions &options) {
  if (strategy == Strategy::kBaseline) {
    return run_baseline(events, options);
  }
  StreamRun run{PartitionedGraph(options.k, options.capacity), {}};
  const EdgePlacer place = make_edge_placer(strategy, options.hash);
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (events[i].a == events[i].b) {
      continue;
    }
    place(events[i], run.graph);
    if (options.sample_every > 0 && (i + 1) % options.sample_every == 0) {
      record(run, options);
    }
  }
  if (!events.empty() &&
      (run.samples.empty() || run.samples.back().edges_seen != run.graph.edge_count())) {
    record(run, options);
  }
  return run;
}

} // namespace streampart
