/*******************************************************************************
 * @file:   optimizer_test.cc
 ******************************************************************************/
#include "streampart/generators.h"
#include "streampart/optimizer.h"
#include "streampart/random.h"
#include "support/oracles.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace streampart {
namespace {

PartitionedGraph layout(PartitionId k, const EdgeList &edges, const std::vector<PartitionId> &part,
                        std::size_t capacity = kUnboundedCapacity) {
  PartitionedGraph g(k, capacity);
  for (NodeId v = 0; v < part.size(); ++v) {
    g.assign(v, part[v]);
  }
  for (const auto &e : edges) {
    g.add_link(e.a, e.b);
  }
  return g;
}

EdgeList two_cliques(NodeId size) {
  EdgeList edges;
  for (NodeId base : {NodeId{0}, size}) {
    for (NodeId a = 0; a < size; ++a) {
      for (NodeId b = a + 1; b < size; ++b) {
        edges.push_back({base + a, base + b});
      }
    }
  }
  edges.push_back({0, size});
  return edges;
}

PartitionedGraph random_layout(PartitionId k, const EdgeList &edges, std::size_t n, Rng &rng) {
  std::vector<PartitionId> part(n);
  for (auto &p : part) {
    p = static_cast<PartitionId>(rng.below(k));
  }
  return layout(k, edges, part);
}

PartitionedGraph stream_greedy_layout(std::uint64_t seed) {
  const auto edges = gen_powerlaw_cluster(1000, seed);
  PartitionedGraph g(4, default_capacity(1000, 4));
  for (const auto &e : stream(edges, {seed})) {
    place_stream_greedy(e, g);
  }
  return g;
}

TEST(Config, Validation) {
  EXPECT_NO_THROW(validate(OptimizerConfig{}));
  OptimizerConfig bad;
  bad.topk_fraction = 0.0;
  EXPECT_THROW(validate(bad), std::invalid_argument);
  bad = {};
  bad.trigger_growth = 1.5;
  EXPECT_THROW(validate(bad), std::invalid_argument);
  bad = {};
  bad.criterion_bias = -0.1;
  EXPECT_THROW(validate(bad), std::invalid_argument);
}

TEST(SelectWorst, TakesLowestBadnessPerPartition) {
  Rng rng(1);
  const auto edges = gen_powerlaw_cluster(400, 1);
  const auto g = random_layout(4, edges, 400, rng);
  const auto selected = select_worst(g, 0.1, SelectionScope::kAllPartitions);
  std::size_t expected_total = 0;
  for (PartitionId p = 0; p < 4; ++p) {
    const auto members = g.members(p);
    const auto take = static_cast<std::size_t>(std::ceil(0.1 * static_cast<double>(members.size())));
    expected_total += take;
    double worst_selected = 0.0;
    double best_unselected = 1.0;
    for (const NodeId v : members) {
      if (std::find(selected.begin(), selected.end(), v) != selected.end()) {
        worst_selected = std::max(worst_selected, badness(v, g));
      } else {
        best_unselected = std::min(best_unselected, badness(v, g));
      }
    }
    EXPECT_LE(worst_selected, best_unselected);
  }
  EXPECT_EQ(selected.size(), expected_total);
}

TEST(SelectWorst, TiesBrokenByNodeId) {
  PartitionedGraph g(1);
  for (NodeId v = 0; v < 20; ++v) {
    g.assign(19 - v, 0);
  }
  const auto selected = select_worst(g, 0.1, SelectionScope::kAllPartitions);
  EXPECT_EQ(selected, (std::vector<NodeId>{0, 1}));
}

TEST(SelectWorst, MostLoadedScopeOnlyAboveMean) {
  std::vector<PartitionId> part;
  for (PartitionId p = 0; p < 4; ++p) {
    part.insert(part.end(), p == 3 ? 22 : 10, p);
  }
  const auto g = layout(4, {}, part);
  const auto selected = select_worst(g, 0.1, SelectionScope::kMostLoaded);
  EXPECT_EQ(selected.size(), 3u);
  for (const NodeId v : selected) {
    EXPECT_EQ(g.partition_of(v), 3u);
  }
}

TEST(SelectWorst, RejectsBadFraction) {
  EXPECT_THROW(select_worst(PartitionedGraph(2), 0.0, SelectionScope::kAllPartitions),
               std::invalid_argument);
}

TEST(ImproveCut, MovesNodeToItsNeighborMajority) {
  // Node 0 on partition 0 with one local neighbor and three on partition 1.
  const EdgeList edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  auto g = layout(2, edges, {0, 0, 1, 1, 1});
  OptimizerConfig cfg;
  cfg.topk_fraction = 0.5;
  EXPECT_EQ(most_neighbors_partition(0, g), 1u);
  improve_cut(g, cfg);
  EXPECT_EQ(g.partition_of(0), 1u);
}

TEST(ImproveCut, NodeAlreadyHomeStays) {
  const EdgeList edges{{0, 1}, {0, 2}};
  auto g = layout(2, edges, {0, 0, 0});
  EXPECT_EQ(improve_cut(g, OptimizerConfig{}), 0u);
}

TEST(ImproveCut, CurrentPartitionWinsTies) {
  const EdgeList edges{{0, 1}, {0, 2}};
  const auto g = layout(3, edges, {2, 1, 2});
  EXPECT_EQ(most_neighbors_partition(0, g), 2u);
  const auto h = layout(3, edges, {0, 2, 1});
  EXPECT_EQ(most_neighbors_partition(0, h), 1u); // lowest index among the tied others
}

TEST(ImproveCut, NeverWorsensCutOnTwoCliques) {
  const auto edges = two_cliques(12);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    auto g = random_layout(2, edges, 24, rng);
    const double before = cut_score(g);
    improve_cut(g, OptimizerConfig{});
    EXPECT_GE(cut_score(g), before);
  }
}

TEST(ImproveCut, NeverMovesTowardFewerNeighbors) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    const auto edges = gen_powerlaw_cluster(300, seed);
    auto g = random_layout(4, edges, 300, rng);
    for (const NodeId v : select_worst(g, 0.1, SelectionScope::kAllPartitions)) {
      const PartitionId from = g.partition_of(v);
      const PartitionId to = most_neighbors_partition(v, g);
      EXPECT_GE(g.neighbors_in(v, to), g.neighbors_in(v, from));
      g.migrate(v, to);
    }
  }
}

TEST(ImproveCut, MigrationVolumeBounded) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto g = stream_greedy_layout(seed);
    const OptimizerConfig cfg;
    const std::size_t moved = improve_cut(g, cfg);
    EXPECT_LE(static_cast<double>(moved), cfg.topk_fraction * 1000 + 4);
  }
}

TEST(ImproveCut, LaterPassesGainLess) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = stream_greedy_layout(seed);
    std::vector<double> gains;
    for (int pass = 0; pass < 3; ++pass) {
      const double before = cut_score(g);
      improve_cut(g, OptimizerConfig{});
      gains.push_back(cut_score(g) / before - 1.0);
    }
    EXPECT_GE(gains[0], gains[1]) << "seed " << seed;
    EXPECT_GE(gains[0], gains[2]) << "seed " << seed;
  }
}

TEST(ImproveBalance, BaselineFormulaWithSelfExclusion) {
  // Partition sizes [20, 10]; node 0 has two neighbors on each side.
  std::vector<PartitionId> part(30, 0);
  std::fill(part.begin() + 20, part.end(), 1);
  const EdgeList edges{{0, 1}, {0, 2}, {0, 20}, {0, 21}};
  auto g = layout(2, edges, part, 30);
  OptimizerConfig cfg;
  cfg.topk_fraction = 0.05;
  ASSERT_EQ(select_worst(g, cfg.topk_fraction, SelectionScope::kMostLoaded),
            (std::vector<NodeId>{0}));
  EXPECT_EQ(improve_balance(g, cfg), 1u);
  EXPECT_EQ(g.partition_of(0), 1u);
}

TEST(ImproveBalance, BalancedLayoutDoesNothing) {
  std::vector<PartitionId> part;
  for (PartitionId p = 0; p < 4; ++p) {
    part.insert(part.end(), 10, p);
  }
  auto g = layout(4, {}, part);
  EXPECT_EQ(improve_balance(g, OptimizerConfig{}), 0u);
}

TEST(ImproveBalance, SkewedLayoutGetsBetter) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    const auto edges = gen_powerlaw_cluster(400, seed);
    std::vector<PartitionId> part(400);
    for (auto &p : part) {
      p = rng.bernoulli(0.7) ? 0 : static_cast<PartitionId>(1 + rng.below(3));
    }
    auto g = layout(4, edges, part);
    const double before = load_balance(g);
    improve_balance(g, OptimizerConfig{});
    EXPECT_GE(load_balance(g), before) << "seed " << seed;
  }
}

class StreamingSystemTest : public ::testing::Test {
protected:
  StreamingSystemTest()
      : system(PartitionedGraph(4, 300), make_edge_placer(Strategy::kStreamGreedy)),
        events(stream(gen_powerlaw_cluster(1000, 4), {4})) {}

  void ingest(std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      system.ingest(events[i]);
    }
  }

  StreamingSystem system;
  std::vector<EdgeEvent> events;
};

TEST_F(StreamingSystemTest, RollbackRestoresSnapshotExactly) {
  ingest(0, 1000);
  const PartitionedGraph before = system.graph();
  system.snapshot();
  improve_cut(system.graph(), OptimizerConfig{});
  ASSERT_NE(system.graph(), before);
  system.rollback();
  EXPECT_EQ(system.graph(), before);
  EXPECT_FALSE(system.has_snapshot());
  EXPECT_THROW(system.rollback(), ContractViolation);
}

TEST_F(StreamingSystemTest, CommitKeepsNewLayout) {
  ingest(0, 1000);
  system.snapshot();
  improve_cut(system.graph(), OptimizerConfig{});
  const PartitionedGraph after = system.graph();
  system.commit();
  EXPECT_EQ(system.graph(), after);
  EXPECT_FALSE(system.has_snapshot());
}

TEST_F(StreamingSystemTest, BufferedEventsAreReplayedOnce) {
  ingest(0, 800);
  system.buffer();
  ingest(800, 1200);
  EXPECT_EQ(system.buffered_events(), 400u);
  EXPECT_EQ(system.graph().edge_count(), 800u);
  system.flush_buffer();
  EXPECT_FALSE(system.is_buffering());
  EXPECT_EQ(system.buffered_events(), 0u);

  StreamingSystem plain(PartitionedGraph(4, 300), make_edge_placer(Strategy::kStreamGreedy));
  for (std::size_t i = 0; i < 1200; ++i) {
    plain.ingest(events[i]);
  }
  EXPECT_EQ(system.graph(), plain.graph());
}

TEST(AcceptRule, ThresholdExamples) {
  EXPECT_TRUE(accept_step(100.0, 100.5, 0.01));
  EXPECT_TRUE(accept_step(100.0, 101.0, 0.01));
  EXPECT_FALSE(accept_step(100.0, 102.0, 0.01));
  EXPECT_TRUE(accept_step(100.0, 99.0, 0.01));
}

class HillClimbStepTest : public StreamingSystemTest {
protected:
  void SetUp() override { ingest(0, 1500); }

  OptimizationOutcome step(std::vector<double> times, double bias = 0.5) {
    OptimizerConfig cfg;
    cfg.criterion_bias = bias;
    std::size_t call = 0;
    const ComputeTimeSource source = [&](const PartitionedGraph &) { return times.at(call++); };
    Rng coin(3);
    return blind_hill_climb_step(system, cfg, source, coin);
  }
};

TEST_F(HillClimbStepTest, SmallDegradationCommits) {
  const auto outcome = step({100.0, 100.5});
  EXPECT_TRUE(outcome.committed);
  EXPECT_FALSE(system.has_snapshot());
  EXPECT_FALSE(system.is_buffering());
}

TEST_F(HillClimbStepTest, LargeDegradationRollsBack) {
  const PartitionedGraph before = system.graph();
  const auto outcome = step({100.0, 102.0}, 1.0);
  EXPECT_FALSE(outcome.committed);
  EXPECT_EQ(outcome.criterion, Criterion::kCut);
  EXPECT_GT(outcome.migrated, 0u);
  EXPECT_EQ(system.graph(), before);
}

TEST_F(HillClimbStepTest, ImprovementCommits) {
  const auto outcome = step({100.0, 99.0}, 0.0);
  EXPECT_TRUE(outcome.committed);
  EXPECT_EQ(outcome.criterion, Criterion::kBalance);
}

TEST_F(HillClimbStepTest, FailingFeedbackRollsBackAndPropagates) {
  const PartitionedGraph before = system.graph();
  std::size_t call = 0;
  const ComputeTimeSource source = [&](const PartitionedGraph &) -> double {
    if (call++ == 1) {
      throw std::runtime_error("feedback lost");
    }
    return 1.0;
  };
  Rng coin(0);
  OptimizerConfig cfg;
  cfg.criterion_bias = 1.0;
  EXPECT_THROW(blind_hill_climb_step(system, cfg, source, coin), std::runtime_error);
  EXPECT_EQ(system.graph(), before);
  EXPECT_FALSE(system.is_buffering());
}

TEST(Trigger, ScheduleMatchesIntegerOracle) {
  std::vector<EdgeCount> points;
  for (EdgeCount e = 100; e <= 10000; e = next_trigger(e, 0.05)) {
    points.push_back(e);
  }
  EXPECT_EQ(points, oracle::trigger_schedule(100, 5, 10000));
  EXPECT_EQ(next_trigger(1, 0.05), 2u);
}

TEST(Batches, Sizes) {
  EXPECT_EQ(compute_batch_size(1000), 50u);
  EXPECT_EQ(compute_batch_size(12000), 120u);
  EXPECT_EQ(application_batch_size(1000), 10u);
  EXPECT_EQ(application_batch_size(1001), 11u);
  EXPECT_EQ(application_batch_size(5), 1u);
}

class OptimizedRunTest : public ::testing::Test {
protected:
  static OptimizedRunOptions options(std::uint64_t seed) {
    OptimizedRunOptions o;
    o.k = 4;
    o.capacity = default_capacity(1000, 4);
    o.walks.walks_per_request = 100;
    o.seed = seed;
    return o;
  }
};

TEST_F(OptimizedRunTest, TriggersFollowTheSchedule) {
  const auto edges = gen_powerlaw_cluster(1000, 2);
  const auto report = run_optimized_stream(stream(edges, {2}), options(2));
  EXPECT_EQ(report.triggers, oracle::trigger_schedule(100, 5, edges.size()));
  EXPECT_EQ(report.graph.edge_count(), edges.size());
  EXPECT_EQ(report.graph.node_count(), 1000u);
}

TEST_F(OptimizedRunTest, FullCutBiasOnlyTriesCut) {
  auto o = options(3);
  o.optimizer->criterion_bias = 1.0;
  const auto report = run_optimized_stream(stream(gen_powerlaw_cluster(1000, 3), {3}), o);
  ASSERT_FALSE(report.steps.empty());
  for (const auto &s : report.steps) {
    EXPECT_EQ(s.outcome.criterion, Criterion::kCut);
  }
}

TEST_F(OptimizedRunTest, OutcomeLogIsConsistent) {
  const auto report = run_optimized_stream(stream(gen_powerlaw_cluster(1000, 5), {5}), options(5));
  const double eps = OptimizerConfig{}.epsilon;
  for (const auto &s : report.steps) {
    EXPECT_EQ(s.outcome.committed, s.outcome.c_after <= s.outcome.c_before * (1 + eps));
    EXPECT_LE(static_cast<double>(s.outcome.migrated), 0.1 * 1000 + 4);
  }
}

TEST_F(OptimizedRunTest, MeasureOnlyRunHasNoSteps) {
  auto o = options(6);
  o.optimizer.reset();
  const auto report = run_optimized_stream(stream(gen_powerlaw_cluster(500, 6), {6}), o);
  EXPECT_TRUE(report.steps.empty());
  EXPECT_FALSE(report.timeline.empty());
}

TEST_F(OptimizedRunTest, DeterministicPerSeed) {
  const auto events = stream(gen_powerlaw_cluster(500, 7), {7});
  const auto a = run_optimized_stream(events, options(7));
  const auto b = run_optimized_stream(events, options(7));
  EXPECT_EQ(a.graph, b.graph);
  ASSERT_EQ(a.timeline.size(), b.timeline.size());
  for (std::size_t i = 0; i < a.timeline.size(); ++i) {
    EXPECT_EQ(a.timeline[i].mean_dependencies, b.timeline[i].mean_dependencies);
  }
}

} // namespace
} // namespace streampart
