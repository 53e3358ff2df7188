#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "backbone/graph.hpp"

namespace bb {

/// Throws DataError unless every node and edge of `backbone` exists in
/// `original` with the same weight.
void require_subgraph(const WeightedGraph& original, const WeightedGraph& backbone);

double node_fraction(const WeightedGraph& original, const WeightedGraph& backbone);
double edge_fraction(const WeightedGraph& original, const WeightedGraph& backbone);
double weight_fraction(const WeightedGraph& original, const WeightedGraph& backbone);

/// 2m / (n (n - 1)); DataError for n < 2.
double density(const WeightedGraph& g);
/// 2m / n; DataError for n = 0.
double average_degree(const WeightedGraph& g);
/// Fraction of ordered node pairs joined by a path, from component sizes;
/// DataError for n < 2.
double reachability(const WeightedGraph& g);

/// Two-sample Kolmogorov-Smirnov statistic max_x |F(x) - G(x)| evaluated
/// at every pooled sample point. UsageError on an empty sample.
double ks_statistic(std::span<const double> a, std::span<const double> b);

enum class DistributionKind { Weights, Degrees };

DistributionKind parse_distribution(std::string_view name);
std::string_view to_string(DistributionKind kind);
std::vector<double> distribution_sample(const WeightedGraph& g, DistributionKind kind);

}  // namespace bb
