#pragma once

#include <limits>
#include <span>
#include <vector>

#include "backbone/graph.hpp"

namespace bb {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Two path lengths within this relative gap are treated as equal. Sums of
/// reciprocal weights that are equal in exact arithmetic can differ in the
/// last bits depending on summation order.
inline constexpr double kPathTieTolerance = 1e-12;

inline bool same_length(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= kPathTieTolerance * std::max(1.0, scale);
}

/// Single-source shortest-path DAG over edge lengths `length` (indexed by
/// EdgeIndex). Keeps every predecessor lying on some shortest path, the
/// number of shortest paths per node, and the settle order (non-decreasing
/// distance), as needed by Brandes-style accumulation.
struct ShortestPathDag {
  std::vector<double> dist;
  std::vector<double> sigma;
  std::vector<NodeIndex> order;
  std::vector<std::vector<Neighbor>> preds;
};

void shortest_path_dag(const WeightedGraph& g, std::span<const double> length, NodeIndex source,
                       ShortestPathDag& out);

/// Minimax path lengths from `source`: the smallest achievable maximum edge
/// length over all paths. Unreachable nodes get kInfinity.
std::vector<double> bottleneck_distances(const WeightedGraph& g, std::span<const double> length, NodeIndex source);

}  // namespace bb
