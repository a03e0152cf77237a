#pragma once

#include "meshroute/cost_matrix.hpp"
#include "meshroute/path_codec.hpp"

namespace meshroute {

struct OracleResult {
    Path path;  // path.cost is the optimal cost
};

inline constexpr int kBruteForceMaxNodes = 12;

/// Minimum-cost path by label setting (Dijkstra). Among equal-cost paths
/// the lexicographically smallest node sequence wins. Throws NoPathError if
/// terminal is unreachable.
OracleResult shortest_path(const CostMatrix& cm, NodeId source, NodeId terminal);

/// Enumerates every loop-free path; same result and tie-break as
/// shortest_path. Only for graphs of at most kBruteForceMaxNodes nodes.
OracleResult brute_force(const CostMatrix& cm, NodeId source, NodeId terminal);

/// 100 * (found - optimal) / optimal. Throws std::invalid_argument when
/// optimal <= 0 and std::logic_error when found undercuts optimal by more
/// than 1e-12, which means either the optimizer or the oracle is wrong.
double percent_error(double found_cost, double optimal_cost);

}  // namespace meshroute
