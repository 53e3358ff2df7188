#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "backbone/backbone.hpp"
#include "backbone/graph.hpp"

namespace bb {

/// Score = raw weight.
Backbone global_threshold(const WeightedGraph& g);

/// Maximum-weight spanning forest, ties broken by canonical edge order.
Backbone maximum_spanning_tree(const WeightedGraph& g);

struct SinkhornOptions {
  double tol = 1e-8;
  std::size_t max_iter = 10000;
};

/// Alternating row/column scaling of the symmetric weighted adjacency
/// matrix. `normalized` holds (P_uv + P_vu) / 2 per edge; `residual` is the
/// largest deviation of a row or column sum from 1.
struct SinkhornResult {
  std::vector<double> normalized;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

SinkhornResult sinkhorn(const WeightedGraph& g, const SinkhornOptions& options = {});

/// Edges taken in descending score order until every connected component
/// of g is spanned by one connected piece of the retained edges (a single
/// component for connected inputs). Sets `multi_component` when g itself is
/// disconnected.
std::vector<std::uint8_t> spanning_prefix(const WeightedGraph& g, const std::vector<double>& scores,
                                          bool* multi_component = nullptr);

/// Sinkhorn-normalized weights as scores; the boolean view is the spanning
/// prefix. Params: tol, max_iter, allow_unconverged (non-zero keeps the last
/// iterate with a warning instead of failing).
Backbone doubly_stochastic(const WeightedGraph& g, const MethodParams& params = {});

/// Fraction of the n single-source shortest-path DAGs (distance 1/w)
/// containing each edge.
std::vector<double> edge_salience(const WeightedGraph& g);

/// Salience scores; boolean view keeps salience >= cutoff (param `cutoff`,
/// default 0.8).
Backbone high_salience_skeleton(const WeightedGraph& g, const MethodParams& params = {});

/// Weighted edge betweenness (distance 1/w) counted over unordered node
/// pairs, shortest-path ties split equally.
std::vector<double> edge_betweenness(const WeightedGraph& g);

/// Largest integer h >= 0 with at least h values >= h.
std::size_t h_index(std::vector<double> values);

/// Union of the h-strength network (weights) and the h-bridge network
/// (edge betweenness / n).
Backbone h_backbone(const WeightedGraph& g);

/// Keeps an edge iff its distance equals the shortest-path distance (sum of
/// distances) between its endpoints.
Backbone metric_backbone(const WeightedGraph& g);

/// Keeps an edge iff its distance equals the minimax path distance between
/// its endpoints.
Backbone ultrametric_backbone(const WeightedGraph& g);

/// Planar maximally filtered graph: greedy descending-weight insertion
/// keeping planarity.
Backbone pmfg(const WeightedGraph& g);

/// Per-node Q(G) - Q(G - v) with Louvain partitions. Params: seed, shuffle.
Backbone modularity_vitality(const WeightedGraph& g, const MethodParams& params = {});

/// Union over nodes of each node's heaviest edge.
Backbone primary_linkage(const WeightedGraph& g);

/// Jaccard similarity of the endpoints' open neighborhoods.
Backbone global_sparsification(const WeightedGraph& g);

Backbone degree_scores(const WeightedGraph& g);
Backbone betweenness_scores(const WeightedGraph& g);

}  // namespace bb
