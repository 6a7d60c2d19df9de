/*******************************************************************************
 * Independent reference computations for the test suites. Nothing here calls
 * into the library's algorithms; only plain containers and edge lists are
 * shared.
 *
 * @file:   oracles.h
 ******************************************************************************/
#pragma once

#include "streampart/partitioned_graph.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace streampart::oracle {

using Assignment = std::vector<std::uint32_t>;

inline std::uint64_t crossing_edges(const EdgeList &edges, const Assignment &part) {
  std::uint64_t crossing = 0;
  for (const Edge &e : edges) {
    crossing += part[e.a] != part[e.b] ? 1 : 0;
  }
  return crossing;
}

inline double cut_score(const EdgeList &edges, const Assignment &part) {
  if (edges.empty()) {
    return 1.0;
  }
  return 1.0 - static_cast<double>(crossing_edges(edges, part)) / static_cast<double>(edges.size());
}

inline double load_balance(const Assignment &part, std::uint32_t k) {
  std::vector<std::size_t> sizes(k, 0);
  for (const auto p : part) {
    ++sizes[p];
  }
  const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  return *hi == 0 ? 1.0 : static_cast<double>(*lo) / static_cast<double>(*hi);
}

inline Assignment assignment_of(const PartitionedGraph &g) {
  Assignment part(g.id_bound(), 0);
  for (NodeId v = 0; v < g.id_bound(); ++v) {
    if (g.is_assigned(v)) {
      part[v] = g.partition_of(v);
    }
  }
  return part;
}

/// Branch and bound over every exactly balanced k-way assignment of n nodes
/// (n divisible by k). Labels are canonical: a node may only open the next
/// unused partition, so each unordered partition appears once. Returns all
/// assignments of minimum crossing count.
class BalancedPartitionSearch {
public:
  BalancedPartitionSearch(std::uint32_t n, const EdgeList &edges, std::uint32_t k)
      : _n(n), _k(k), _target(n / k), _adj(n), _part(n, kNone), _sizes(k, 0) {
    for (const Edge &e : edges) {
      _adj[e.a].push_back(e.b);
      _adj[e.b].push_back(e.a);
    }
  }

  std::uint64_t best_cut() const { return _best; }
  const std::vector<Assignment> &optima() const { return _optima; }

  void run() {
    _best = std::numeric_limits<std::uint64_t>::max();
    _optima.clear();
    recurse(0, 0, 0);
  }

private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  void recurse(std::uint32_t v, std::uint32_t used, std::uint64_t cut) {
    if (cut > _best) {
      return;
    }
    if (v == _n) {
      if (cut < _best) {
        _best = cut;
        _optima.clear();
      }
      _optima.push_back(_part);
      return;
    }
    const std::uint32_t limit = std::min(used + 1, _k);
    for (std::uint32_t p = 0; p < limit; ++p) {
      if (_sizes[p] == _target) {
        continue;
      }
      std::uint64_t added = 0;
      for (const NodeId u : _adj[v]) {
        if (u < v && _part[u] != p) {
          ++added;
        }
      }
      _part[v] = p;
      ++_sizes[p];
      recurse(v + 1, std::max(used, p + 1), cut + added);
      --_sizes[p];
      _part[v] = kNone;
    }
  }

  std::uint32_t _n;
  std::uint32_t _k;
  std::uint32_t _target;
  std::vector<std::vector<NodeId>> _adj;
  Assignment _part;
  std::vector<std::uint32_t> _sizes;
  std::uint64_t _best = std::numeric_limits<std::uint64_t>::max();
  std::vector<Assignment> _optima;
};

/// Smallest number of nodes that must change partition to turn `from` into
/// `to`, minimized over relabelings of `to`'s partitions.
inline std::size_t transfer_distance(const Assignment &from, const Assignment &to,
                                     std::uint32_t k) {
  std::vector<std::uint32_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = from.size();
  do {
    std::size_t moved = 0;
    for (std::size_t v = 0; v < from.size(); ++v) {
      moved += perm[to[v]] != from[v] ? 1 : 0;
    }
    best = std::min(best, moved);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Minimum crossing count over all 2-way splits of n <= 24 nodes, either any
/// nonempty proper split or only exactly balanced ones.
inline std::uint64_t min_two_way_cut(std::uint32_t n, const EdgeList &edges, bool balanced) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  // Node n-1 fixed on side 0 to skip mirrored splits.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    if (balanced && static_cast<std::uint32_t>(std::popcount(mask)) != n / 2) {
      continue;
    }
    std::uint64_t cut = 0;
    for (const Edge &e : edges) {
      cut += ((mask >> e.a) & 1) != ((mask >> e.b) & 1) ? 1 : 0;
    }
    best = std::min(best, cut);
  }
  return best;
}

inline std::vector<std::vector<NodeId>> adjacency(std::size_t n, const EdgeList &edges) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge &e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

/// Mean local clustering coefficient; nodes of degree < 2 count as 0.
inline double average_clustering(std::size_t n, const EdgeList &edges) {
  std::set<std::pair<NodeId, NodeId>> present;
  for (const Edge &e : edges) {
    present.emplace(std::min(e.a, e.b), std::max(e.a, e.b));
  }
  const auto adj = adjacency(n, edges);
  double total = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto &nb = adj[v];
    if (nb.size() < 2) {
      continue;
    }
    std::size_t closed = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        closed += present.count({std::min(nb[i], nb[j]), std::max(nb[i], nb[j])});
      }
    }
    total += 2.0 * static_cast<double>(closed) /
             static_cast<double>(nb.size() * (nb.size() - 1));
  }
  return n == 0 ? 0.0 : total / static_cast<double>(n);
}

/// Degree-preserving randomization by double edge swaps (no self loops, no
/// multi-edges), 10 swap attempts per edge.
inline EdgeList degree_preserving_rewire(EdgeList edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<NodeId, NodeId>> present;
  auto key = [](NodeId a, NodeId b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  for (const Edge &e : edges) {
    present.insert(key(e.a, e.b));
  }
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  for (std::size_t attempt = 0; attempt < 10 * edges.size(); ++attempt) {
    Edge &x = edges[pick(rng)];
    Edge &y = edges[pick(rng)];
    if (&x == &y) {
      continue;
    }
    const NodeId a = x.a, b = x.b, c = y.a, d = y.b;
    if (a == c || a == d || b == c || b == d) {
      continue;
    }
    if (present.count(key(a, d)) || present.count(key(c, b))) {
      continue;
    }
    present.erase(key(a, b));
    present.erase(key(c, d));
    present.insert(key(a, d));
    present.insert(key(c, b));
    x = {a, d};
    y = {c, b};
  }
  return edges;
}

inline bool connected(std::size_t n, const EdgeList &edges) {
  if (n == 0) {
    return true;
  }
  const auto adj = adjacency(n, edges);
  std::vector<bool> seen(n, false);
  std::vector<NodeId> todo{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const NodeId v = todo.back();
    todo.pop_back();
    for (const NodeId u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        todo.push_back(u);
      }
    }
  }
  return reached == n;
}

/// Trigger points for a growth rate given as percent, in exact integer
/// arithmetic: next = max(e + 1, ceil(e * (100 + pct) / 100)).
inline std::vector<std::uint64_t> trigger_schedule(std::uint64_t first, std::uint64_t percent,
                                                   std::uint64_t total_edges) {
  std::vector<std::uint64_t> points;
  for (std::uint64_t e = first; e <= total_edges;) {
    points.push_back(e);
    const std::uint64_t grown = (e * (100 + percent) + 99) / 100;
    e = std::max(e + 1, grown);
  }
  return points;
}

/// Direct evaluation of both expected request times on the vicious graph.
struct ViciousTimes {
  double wb;
  double mc;
};

inline ViciousTimes vicious_times(double N, double n, double C, double chi, double lambda,
                                  double phi, double ell) {
  const double s = n + N;
  return {phi * s / chi + lambda * ell * 2.0 * C / s,
          2.0 * phi * (n * n + N * N) / (chi * s) + lambda * ell * 2.0 / s};
}

} // namespace streampart::oracle
