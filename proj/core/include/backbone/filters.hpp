#pragma once

#include "backbone/backbone.hpp"
#include "backbone/graph.hpp"

namespace bb {

/// Which filter to apply and its parameter (ignored for Boolean). Fraction
/// parameters lie in (0, 1]; threshold parameters are finite.
struct FilterSpec {
  FilterKind kind = FilterKind::Boolean;
  double value = 0.0;

  static FilterSpec boolean() { return {FilterKind::Boolean, 0.0}; }
  static FilterSpec threshold(double t) { return {FilterKind::Threshold, t}; }
  static FilterSpec fraction(double f) { return {FilterKind::Fraction, f}; }

  /// Throws UsageError on an out-of-range parameter.
  void validate() const;
};

/// Edge backbones keep the marked edges and their endpoints; node backbones
/// yield the subgraph induced by the marked nodes.
WeightedGraph boolean_filter(const Backbone& b);

/// Scores keep value >= t, p-values keep value < t.
WeightedGraph threshold_filter(const Backbone& b, double t);

/// Keeps the max(1, round(f * count)) strongest items, rounding half away
/// from zero. Ties are broken by weight (strength for nodes) descending, then
/// canonical order.
WeightedGraph fraction_filter(const Backbone& b, double f);

/// Number of items fraction_filter retains out of `count`.
std::size_t fraction_count(double f, std::size_t count);

/// Dispatches on spec.kind after checking compatibility. Throws UsageError
/// when the backbone does not support the filter.
WeightedGraph apply_filter(const Backbone& b, const FilterSpec& spec);

}  // namespace bb
