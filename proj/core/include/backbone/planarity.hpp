#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "backbone/graph.hpp"

namespace bb {

using NodePair = std::pair<NodeIndex, NodeIndex>;

/// Linear-time planarity test (Boyer-Myrvold) on a simple graph with nodes
/// 0..n-1.
bool is_planar(std::size_t node_count, std::span<const NodePair> edges);
bool is_planar(const WeightedGraph& g);

}  // namespace bb
