/*******************************************************************************
 * @file:   cost_model.cc
 ******************************************************************************/
#include "streampart/cost_model.h"

#include <cmath>
#include <stdexcept>

namespace streampart::cost {

void validate(const CostParams &params) {
  if (!(params.chi > 0.0 && params.lambda > 0.0 && params.phi > 0.0 && params.mu > 0.0)) {
    throw std::invalid_argument("cost params: chi, lambda, phi and mu must be positive");
  }
}

void validate(const ViciousCostInstance &inst) {
  validate(inst.params);
  if (!(inst.big > inst.small && inst.small > inst.c_links && inst.c_links >= 1)) {
    throw std::invalid_argument("cost instance: requires N > n > C >= 1");
  }
}

double centralized_request_time(const CostParams &params, double memory, double cpu,
                                double concurrent_requests) {
  validate(params);
  return concurrent_requests * (memory / params.mu + cpu / params.chi);
}

double request_time(const CostParams &params, std::uint64_t partition_size,
                    std::uint64_t remote_partitions) {
  validate(params);
  if (partition_size == 0) {
    throw std::invalid_argument("request_time: partition size must be at least 1");
  }
  return params.phi * static_cast<double>(partition_size) / params.chi +
         params.lambda * static_cast<double>(remote_partitions);
}

double expected_time_wb(const ViciousCostInstance &inst) {
  validate(inst);
  const auto &p = inst.params;
  const double total = static_cast<double>(inst.small) + inst.big;
  return p.phi * total / p.chi + p.lambda * p.ell * 2.0 * inst.c_links / total;
}

double expected_time_mc(const ViciousCostInstance &inst) {
  validate(inst);
  const auto &p = inst.params;
  const double n = inst.small;
  const double big = inst.big;
  const double total = n + big;
  return 2.0 * p.phi * (n * n + big * big) / (p.chi * total) + p.lambda * p.ell * 2.0 / total;
}

TradeoffSides tradeoff_sides(const ViciousCostInstance &inst) {
  validate(inst);
  if (inst.c_links < 2) {
    throw std::invalid_argument("tradeoff_sides: reduced form needs C > 1");
  }
  const auto &p = inst.params;
  const double gap = static_cast<double>(inst.small) - inst.big;
  return {2.0 * p.ell * p.lambda * p.chi / p.phi, gap * gap / (inst.c_links - 1.0)};
}

bool wb_preferred(const ViciousCostInstance &inst) {
  validate(inst);
  if (inst.c_links == 1) {
    return expected_time_wb(inst) <= expected_time_mc(inst);
  }
  const auto sides = tradeoff_sides(inst);
  return sides.application <= sides.graph;
}

std::uint32_t damping_locality(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("damping_locality: alpha must lie in (0,1)");
  }
  return static_cast<std::uint32_t>(std::ceil(-1.0 / std::log(alpha)));
}

} // namespace streampart::cost
