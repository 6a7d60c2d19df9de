/*******************************************************************************
 * @file:   generators.cc
 ******************************************************************************/
#include "streampart/generators.h"

#include "streampart/random.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace streampart {

namespace {

std::uint64_t pairs(std::uint64_t n) { return n * (n - 1) / 2; }

void add_clique(EdgeList &edges, NodeId first, std::uint32_t size) {
  for (NodeId u = first; u < first + size; ++u) {
    for (NodeId v = u + 1; v < first + size; ++v) {
      edges.push_back({u, v});
    }
  }
}

// Holme-Kim growth following the NetworkX powerlaw_cluster_graph procedure:
// m isolated seed nodes, then each new node attaches to m distinct targets
// drawn proportionally to degree, replacing an attachment by a triad-closing
// edge with probability p.
void add_powerlaw_cluster(EdgeList &edges, NodeId offset, const PowerlawClusterSpec &spec,
                          Rng &rng) {
  const std::uint32_t m = spec.attachment;
  std::vector<std::vector<NodeId>> adjacency(spec.nodes);
  std::vector<NodeId> repeated;
  for (NodeId v = 0; v < m; ++v) {
    repeated.push_back(v);
  }

  auto connected = [&](NodeId u, NodeId v) {
    const auto &list = adjacency[u];
    return std::find(list.begin(), list.end(), v) != list.end();
  };
  // Linking an existing pair is a no-op, as in NetworkX's Graph.add_edge.
  auto link = [&](NodeId u, NodeId v) {
    if (connected(u, v)) {
      return;
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
    edges.push_back({offset + u, offset + v});
  };

  for (NodeId source = m; source < spec.nodes; ++source) {
    // m distinct degree-weighted targets
    std::vector<NodeId> targets;
    while (targets.size() < m) {
      const NodeId pick = repeated[rng.below(repeated.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }

    NodeId target = targets.back();
    targets.pop_back();
    link(source, target);
    repeated.push_back(target);

    std::uint32_t count = 1;
    while (count < m) {
      if (rng.bernoulli(spec.triad_probability)) {
        std::vector<NodeId> closing;
        for (const NodeId nbr : adjacency[target]) {
          if (nbr != source && !connected(source, nbr)) {
            closing.push_back(nbr);
          }
        }
        if (!closing.empty()) {
          const NodeId nbr = closing[rng.below(closing.size())];
          link(source, nbr);
          repeated.push_back(nbr);
          ++count;
          continue;
        }
      }
      target = targets.back();
      targets.pop_back();
      link(source, target);
      repeated.push_back(target);
      ++count;
    }
    repeated.insert(repeated.end(), m, source);
  }
}

} // namespace

void validate(const RingSpec &spec) {
  if (spec.k < 2) {
    throw std::invalid_argument("ring: k must be at least 2");
  }
  if (spec.cluster_size < 2) {
    throw std::invalid_argument("ring: cluster_size must be at least 2");
  }
  if (spec.a_links >= spec.cluster_size || spec.b_links >= spec.cluster_size) {
    throw std::invalid_argument("ring: A and B must be smaller than cluster_size (got A=" +
                                std::to_string(spec.a_links) + ", B=" +
                                std::to_string(spec.b_links) + ", cluster_size=" +
                                std::to_string(spec.cluster_size) + ")");
  }
}

void validate(const ViciousSpec &spec) {
  if (!(spec.big > spec.small && spec.small > spec.c_links && spec.c_links > 1)) {
    throw std::invalid_argument("vicious: requires N > n > C > 1 (got N=" +
                                std::to_string(spec.big) + ", n=" + std::to_string(spec.small) +
                                ", C=" + std::to_string(spec.c_links) + ")");
  }
}

std::uint64_t ring_edge_count(const RingSpec &spec) {
  return 2ULL * spec.k * pairs(spec.cluster_size) + 1ULL * spec.k * spec.a_links +
         1ULL * spec.k * spec.b_links;
}

std::uint64_t vicious_edge_count(const ViciousSpec &spec) {
  return 2 * pairs(spec.big) + 2 * pairs(spec.small) + 2ULL * spec.c_links + 2;
}

EdgeList gen_ring(const RingSpec &spec) {
  validate(spec);
  const std::uint32_t clusters = 2 * spec.k;
  const std::uint32_t s = spec.cluster_size;
  EdgeList edges;
  edges.reserve(ring_edge_count(spec));
  for (std::uint32_t c = 0; c < clusters; ++c) {
    add_clique(edges, c * s, s);
  }
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    const std::uint32_t left = 2 * i;
    const std::uint32_t right = 2 * i + 1;
    for (std::uint32_t j = 0; j < spec.a_links; ++j) {
      edges.push_back({left * s + j, right * s + j});
    }
  }
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    const std::uint32_t left = 2 * i + 1;
    const std::uint32_t right = (2 * i + 2) % clusters;
    for (std::uint32_t j = 0; j < spec.b_links; ++j) {
      edges.push_back({left * s + j, right * s + j});
    }
  }
  return edges;
}

EdgeList ring_a_cut_additions(const RingSpec &spec, std::uint32_t cut, std::uint32_t count) {
  validate(spec);
  if (cut >= spec.k) {
    throw std::invalid_argument("ring: A cut index out of range");
  }
  if (spec.a_links + count > spec.cluster_size) {
    throw std::invalid_argument("ring: not enough distinct endpoints for extra A links");
  }
  const std::uint32_t s = spec.cluster_size;
  const std::uint32_t left = 2 * cut;
  const std::uint32_t right = 2 * cut + 1;
  EdgeList edges;
  for (std::uint32_t j = spec.a_links; j < spec.a_links + count; ++j) {
    edges.push_back({left * s + j, right * s + j});
  }
  return edges;
}

EdgeList gen_vicious(const ViciousSpec &spec) {
  validate(spec);
  const NodeId big0 = 0;
  const NodeId big1 = spec.big;
  const NodeId small0 = 2 * spec.big;
  const NodeId small1 = 2 * spec.big + spec.small;

  EdgeList edges;
  edges.reserve(vicious_edge_count(spec));
  add_clique(edges, big0, spec.big);
  add_clique(edges, big1, spec.big);
  add_clique(edges, small0, spec.small);
  add_clique(edges, small1, spec.small);
  for (std::uint32_t j = 0; j < spec.c_links; ++j) {
    edges.push_back({big0 + j, big1 + j});
    edges.push_back({small0 + j, small1 + j});
  }
  for (std::uint32_t j = 0; j < 2; ++j) {
    edges.push_back({big0 + j, small0 + j});
  }
  return edges;
}

EdgeList gen_powerlaw_cluster(const PowerlawClusterSpec &spec, std::uint64_t seed) {
  if (spec.attachment < 1 || spec.nodes <= spec.attachment) {
    throw std::invalid_argument("powerlaw: need nodes > attachment >= 1");
  }
  if (spec.triad_probability < 0.0 || spec.triad_probability > 1.0) {
    throw std::invalid_argument("powerlaw: triad probability must lie in [0,1]");
  }
  Rng rng(derive_seed(seed, seed_label::kGenerator));
  EdgeList edges;
  edges.reserve(static_cast<std::size_t>(spec.attachment) * spec.nodes);
  add_powerlaw_cluster(edges, 0, spec, rng);
  return edges;
}

EdgeList gen_powerlaw_cluster(std::uint32_t nodes, std::uint64_t seed) {
  if (nodes < 10) {
    throw std::invalid_argument("powerlaw: at least 10 nodes required");
  }
  return gen_powerlaw_cluster(PowerlawClusterSpec{.nodes = nodes}, seed);
}

EdgeList gen_communities(const CommunitySpec &spec, std::uint64_t seed) {
  if (spec.communities < 1) {
    throw std::invalid_argument("communities: need at least one community");
  }
  if (spec.inter_fraction < 0.0) {
    throw std::invalid_argument("communities: inter_fraction must be nonnegative");
  }
  const PowerlawClusterSpec inner{spec.community_size, spec.attachment, spec.triad_probability};
  Rng rng(derive_seed(seed, seed_label::kGenerator));
  EdgeList edges;
  for (std::uint32_t c = 0; c < spec.communities; ++c) {
    add_powerlaw_cluster(edges, c * spec.community_size, inner, rng);
  }
  if (spec.communities < 2) {
    return edges;
  }

  const auto inter = static_cast<std::size_t>(spec.inter_fraction * edges.size());
  std::unordered_set<std::uint64_t> seen;
  for (const Edge &e : edges) {
    seen.insert(e.key());
  }
  std::size_t added = 0;
  while (added < inter) {
    const auto ca = static_cast<std::uint32_t>(rng.below(spec.communities));
    auto cb = static_cast<std::uint32_t>(rng.below(spec.communities - 1));
    if (cb >= ca) {
      ++cb;
    }
    const Edge e{static_cast<NodeId>(ca * spec.community_size + rng.below(spec.community_size)),
                 static_cast<NodeId>(cb * spec.community_size + rng.below(spec.community_size))};
    if (seen.insert(e.key()).second) {
      edges.push_back(e);
      ++added;
    }
  }
  return edges;
}

std::vector<EdgeEvent> stream(const EdgeList &edges, StreamOrder order) {
  std::vector<EdgeEvent> events(edges.begin(), edges.end());
  Rng rng(derive_seed(order.seed, seed_label::kStreamOrder));
  shuffle(std::span<EdgeEvent>(events), rng);
  return events;
}

std::size_t node_id_bound(const EdgeList &edges) {
  std::size_t bound = 0;
  for (const Edge &e : edges) {
    bound = std::max<std::size_t>(bound, std::max(e.a, e.b) + std::size_t{1});
  }
  return bound;
}

std::vector<ConfigurationSample>
sample_random_partitions(const EdgeList &edges, PartitionId k, std::size_t trials,
                         std::uint64_t seed) {
  if (k < 1) {
    throw std::invalid_argument("sampler: k must be positive");
  }
  const std::size_t bound = node_id_bound(edges);
  std::vector<bool> present(bound, false);
  for (const Edge &e : edges) {
    present[e.a] = true;
    present[e.b] = true;
  }

  std::vector<ConfigurationSample> samples;
  samples.reserve(trials);
  std::vector<PartitionId> part(bound, 0);
  std::vector<std::size_t> sizes(k);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(derive_seed(seed, seed_label::kSampler), t));
    std::fill(sizes.begin(), sizes.end(), 0);
    for (std::size_t v = 0; v < bound; ++v) {
      if (present[v]) {
        part[v] = static_cast<PartitionId>(rng.below(k));
        ++sizes[part[v]];
      }
    }
    std::size_t crossing = 0;
    for (const Edge &e : edges) {
      crossing += (part[e.a] != part[e.b]);
    }
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    const double balance = *hi == 0 ? 1.0 : static_cast<double>(*lo) / static_cast<double>(*hi);
    const double cut = edges.empty() ? 1.0
                                     : 1.0 - static_cast<double>(crossing) /
                                                 static_cast<double>(edges.size());
    samples.push_back({balance, cut});
  }
  return samples;
}

} // namespace streampart
