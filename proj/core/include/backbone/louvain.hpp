#pragma once

#include <cstdint>
#include <vector>

#include "backbone/graph.hpp"

namespace bb {

struct Partition {
  std::vector<std::size_t> community;  // per node, numbered 0..k-1
  double modularity = 0.0;
};

/// Weighted Newman modularity (resolution 1) of a node partition. Graphs
/// without edges have modularity 0.
double modularity(const WeightedGraph& g, const std::vector<std::size_t>& community);

/// Louvain local moving + aggregation. Nodes are visited in index (label)
/// order unless `shuffle` is set, in which case the seed fixes the order.
Partition louvain(const WeightedGraph& g, std::uint64_t seed = 0, bool shuffle = false);

}  // namespace bb
