#pragma once

#include <cstddef>
#include <vector>

#include "backbone/backbone.hpp"
#include "backbone/graph.hpp"

namespace bb {

/// Edge weights as integers, for the unit-edge null models. Non-integer
/// weights are a DataError unless `round` is set, in which case they are
/// rounded to the nearest integer, with a floor of 1.
std::vector<double> integer_weights(const WeightedGraph& g, bool round);

/// Uniform null over a node's normalized weights; per endpoint
/// p = (1 - w/s)^(k-1), degree-1 endpoints give 1, edge keeps the minimum.
Backbone disparity(const WeightedGraph& g);

/// P(X >= w), X ~ Binomial(T, s_i s_j / (2 T^2)) on integer weights.
Backbone marginal_likelihood(const WeightedGraph& g, const MethodParams& params = {});

/// P(X >= w), X ~ Binomial(T, (s_i/T)(s_j/T)); q > 1 is clamped and reported.
Backbone noise_corrected(const WeightedGraph& g, const MethodParams& params = {});

/// Empirical-CDF significance: fraction of the endpoint's edges whose
/// weight is at least this edge's weight; edge keeps the minimum.
Backbone lans(const WeightedGraph& g);

/// Boolean backbone: each node keeps its top-c edges, c chosen by best
/// Pearson correlation with the evenly spread hypothetical vector.
Backbone mla(const WeightedGraph& g);

/// Number of top edges node-level MLA keeps for a descending weight vector.
std::size_t mla_keep_count(const std::vector<double>& descending_weights);

enum class EcmSolver { Auto, FixedPoint, Newton };

struct EcmOptions {
  double tol = 1e-8;
  std::size_t max_iter = 10000;
  double damping = 0.5;
  EcmSolver solver = EcmSolver::Auto;
  std::size_t newton_max_iter = 500;
};

/// Enhanced configuration model parameters per node (indexed by NodeIndex).
///
/// Stored as log_x = ln x and beta = -ln y. log_x is +infinity for nodes linked to every other node: their edge
/// probabilities are pinned to 1.
struct EcmFit {
  std::vector<double> log_x;
  std::vector<double> beta;
  std::vector<char> active;  // nodes with at least one edge
  double residual = 0.0;
  std::size_t iterations = 0;
  EcmSolver solver_used = EcmSolver::FixedPoint;

  double x(NodeIndex i) const;
  double y(NodeIndex i) const;
  /// Connection probability between two distinct active nodes.
  double connection_probability(NodeIndex i, NodeIndex j) const;
  /// P(W_ij >= w) for integer w >= 1.
  double p_value(NodeIndex i, NodeIndex j, double w) const;
  double expected_degree(NodeIndex i) const;
  double expected_strength(NodeIndex i) const;
};

/// Solves <k_i> = k_i and <s_i> = s_i. Residual is the maximum over nodes of
/// |<k_i> - k_i| and |<s_i> - s_i| / max(1, s_i). Throws MethodError when
/// the residual stays above tol.
EcmFit ecm_fit(const WeightedGraph& g, const EcmOptions& options = {}, bool round_weights = false);

/// p-value per edge from the fitted ensemble. Params: tol, max_iter,
/// damping, solver (0 auto, 1 fixed point, 2 newton).
Backbone ecm(const WeightedGraph& g, const MethodParams& params = {});

}  // namespace bb
