/*******************************************************************************
 * Synthetic topologies, seeded edge streams and the random-configuration
 * sampler.
 *
 * All generators are pure functions of their spec and seed. Node ids are
 * dense, starting at 0.
 *
 * @file:   generators.h
 ******************************************************************************/
#pragma once

#include "streampart/partitioned_graph.h"

#include <cstdint>
#include <vector>

namespace streampart {

/// Ring of 2k complete clusters C_1..C_2k. A links join (C_{2i-1}, C_{2i}),
/// B links join (C_{2i}, C_{2i+1 mod 2k}). Cluster c (0-based) owns node ids
/// [c * cluster_size, (c + 1) * cluster_size).
struct RingSpec {
  std::uint32_t k = 3;
  std::uint32_t cluster_size = 4;
  std::uint32_t a_links = 1;
  std::uint32_t b_links = 2;
};

/// Four complete clusters of sizes N, N, n, n. Equal-size clusters are joined
/// by c_links edges, and the first N-cluster is joined to the first n-cluster
/// by two single links. Node layout: [N-cluster 0][N-cluster 1][n-cluster 0]
/// [n-cluster 1].
struct ViciousSpec {
  std::uint32_t big = 6;
  std::uint32_t small = 4;
  std::uint32_t c_links = 3;
};

/// Holme-Kim preferential attachment with triad closure.
struct PowerlawClusterSpec {
  std::uint32_t nodes = 1000;
  std::uint32_t attachment = 2;
  double triad_probability = 0.5;
};

/// Two-level clustered graph: `communities` Holme-Kim graphs of
/// `community_size` nodes each, plus `inter_fraction` * (intra edge count)
/// random edges between distinct communities. Community c owns node ids
/// [c * community_size, (c + 1) * community_size).
struct CommunitySpec {
  std::uint32_t communities = 4;
  std::uint32_t community_size = 250;
  std::uint32_t attachment = 3;
  double triad_probability = 0.5;
  double inter_fraction = 0.05;
};

struct StreamOrder {
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument with a diagnostic when a spec is invalid.
void validate(const RingSpec &spec);
void validate(const ViciousSpec &spec);

EdgeList gen_ring(const RingSpec &spec);

/// `count` additional links across the A cut between C_{2*cut+1} and
/// C_{2*cut+2} (0-based cut index), continuing the lowest-id endpoint
/// pattern after the existing a_links.
EdgeList ring_a_cut_additions(const RingSpec &spec, std::uint32_t cut, std::uint32_t count);

/// Cluster index (0-based) of a ring node.
inline std::uint32_t ring_cluster_of(const RingSpec &spec, NodeId v) {
  return v / spec.cluster_size;
}

EdgeList gen_vicious(const ViciousSpec &spec);

/// Closed-form edge counts, used by property tests.
std::uint64_t ring_edge_count(const RingSpec &spec);
std::uint64_t vicious_edge_count(const ViciousSpec &spec);

EdgeList gen_powerlaw_cluster(const PowerlawClusterSpec &spec, std::uint64_t seed);
EdgeList gen_powerlaw_cluster(std::uint32_t nodes, std::uint64_t seed);

EdgeList gen_communities(const CommunitySpec &spec, std::uint64_t seed);

/// Seeded permutation of the edge set.
std::vector<EdgeEvent> stream(const EdgeList &edges, StreamOrder order);

/// One past the largest node id referenced by the edge list.
std::size_t node_id_bound(const EdgeList &edges);

struct ConfigurationSample {
  double balance;
  double cut_score;
};

/// Independent uniform node -> partition assignments, measured with the same
/// metrics as the partitioner.
std::vector<ConfigurationSample>
sample_random_partitions(const EdgeList &edges, PartitionId k, std::size_t trials,
                         std::uint64_t seed);

} // namespace streampart
