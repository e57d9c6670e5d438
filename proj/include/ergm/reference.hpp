#pragma once

#include "ergm/graphspace.hpp"

namespace ergm::reference {

/// Serial implementations that work from an explicit adjacency matrix and
/// degree sequence instead of bit tricks. They share no counting code with
/// the parallel kernel, so tests can cross-check the two, and the benchmark
/// target measures what the kernel buys.

Rat statistic_value(const EdgeMask& g, const StatisticSpec& spec);
RatVec statistic_vector(const EdgeMask& g, const std::vector<StatisticSpec>& specs);
RealizableSet realizable_set(int k, const std::vector<StatisticSpec>& specs);

}  // namespace ergm::reference
