/*******************************************************************************
 * Analytical request-time model and the balance-vs-cut tradeoff on the
 * four-cluster graph (two N-cliques, two n-cliques).
 *
 * @file:   cost_model.h
 ******************************************************************************/
#pragma once

#include <cstdint>

namespace streampart::cost {

struct CostParams {
  double chi = 1.0;    // processing supply per time unit
  double lambda = 1.0; // latency of one remote fetch
  double phi = 1.0;    // CPU demand of a request
  std::uint32_t ell = 1; // request locality in hops
  double mu = 1.0;     // memory supply (centralized model only)
};

struct ViciousCostInstance {
  std::uint32_t big = 20;  // N
  std::uint32_t small = 10; // n
  std::uint32_t c_links = 3; // C
  CostParams params{};
};

/// Throws std::invalid_argument when a parameter is out of its domain.
void validate(const CostParams &params);
void validate(const ViciousCostInstance &inst);

/// Centralized model: n_r * (m / mu + c / chi).
double centralized_request_time(const CostParams &params, double memory, double cpu,
                                double concurrent_requests = 1.0);

/// Distributed model: phi * |P(p)| / chi + lambda * (remote partitions touched).
double request_time(const CostParams &params, std::uint64_t partition_size,
                    std::uint64_t remote_partitions);

/// Expected time under the exactly balanced bisection:
/// phi (n+N) / chi + lambda ell 2C / (n+N).
double expected_time_wb(const ViciousCostInstance &inst);

/// Expected time under the minimum 2-edge cut:
/// 2 phi (n^2+N^2) / (chi (n+N)) + lambda ell 2 / (n+N).
double expected_time_mc(const ViciousCostInstance &inst);

struct TradeoffSides {
  double application; // 2 ell lambda chi / phi
  double graph;       // (n-N)^2 / (C-1)
};

/// Both sides of the reduced inequality. Requires C > 1.
TradeoffSides tradeoff_sides(const ViciousCostInstance &inst);

/// True when the balanced bisection is at least as fast as the min cut.
/// Uses the reduced form application <= graph; with C == 1 the reduced form
/// is undefined and the two expectations are compared directly.
bool wb_preferred(const ViciousCostInstance &inst);

/// Expected locality of a damping walk, ceil(-1 / ln(alpha)).
std::uint32_t damping_locality(double alpha);

} // namespace streampart::cost
