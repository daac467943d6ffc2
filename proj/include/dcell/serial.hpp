#pragma once

// Single-threaded reference versions of the parallel kernels. They follow the
// plainest route (label oracle, one root or pair at a time) and exist for
// tests and the benchmark.

#include <cstdint>
#include <optional>
#include <vector>

#include "dcell/h_symmetry.hpp"
#include "dcell/topology.hpp"

namespace dcell::serial {

/// Builds every row from DCell::neighbors instead of the integer rule.
Topology build_graph(const Params& params, std::uint64_t budget = kDefaultBudget);

std::vector<std::uint64_t> cycle_census(const Graph& graph, int length, bool induced_only = false);

PairCertification certify_pairs(const HSpec& spec, std::optional<std::size_t> sample = std::nullopt,
                                std::uint64_t seed = 0x5eed);

} // namespace dcell::serial
