#include "backbone/filters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "backbone/error.hpp"

namespace bb {
namespace {

void require(const Backbone& b, FilterKind kind) {
  if (!b.compatible_filters().contains(kind)) {
    throw UsageError("filter '" + std::string(to_string(kind)) + "' cannot be applied to backbone '" +
                     b.method_name() + "'");
  }
}

WeightedGraph select(const Backbone& b, const std::vector<std::uint8_t>& mask) {
  const WeightedGraph& g = b.source();
  if (b.target() == Target::Edges) {
    std::vector<EdgeIndex> kept;
    for (EdgeIndex e = 0; e < mask.size(); ++e)
      if (mask[e]) kept.push_back(e);
    return edge_subgraph(g, kept);
  }
  std::vector<NodeIndex> kept;
  for (NodeIndex v = 0; v < mask.size(); ++v)
    if (mask[v]) kept.push_back(v);
  return induced_subgraph(g, kept);
}

bool stronger(const Backbone& b, double x, double y) {
  return b.direction() == Direction::HigherIsStronger ? x > y : x < y;
}

}  // namespace

void FilterSpec::validate() const {
  switch (kind) {
    case FilterKind::Boolean:
      return;
    case FilterKind::Threshold:
      if (!std::isfinite(value)) throw UsageError("threshold must be finite");
      return;
    case FilterKind::Fraction:
      if (!(value > 0.0 && value <= 1.0)) throw UsageError("fraction must lie in (0, 1]");
      return;
  }
}

WeightedGraph boolean_filter(const Backbone& b) {
  require(b, FilterKind::Boolean);
  return select(b, b.boolean_mask());
}

WeightedGraph threshold_filter(const Backbone& b, double t) {
  require(b, FilterKind::Threshold);
  FilterSpec::threshold(t).validate();
  const auto& values = b.values();
  std::vector<std::uint8_t> mask(values.size());
  const bool higher = b.direction() == Direction::HigherIsStronger;
  for (std::size_t i = 0; i < values.size(); ++i) mask[i] = (higher ? values[i] >= t : values[i] < t) ? 1 : 0;
  return select(b, mask);
}

std::size_t fraction_count(double f, std::size_t count) {
  if (count == 0) return 0;
  const auto wanted = static_cast<std::size_t>(std::round(f * static_cast<double>(count)));
  return std::min(count, std::max<std::size_t>(1, wanted));
}

WeightedGraph fraction_filter(const Backbone& b, double f) {
  require(b, FilterKind::Fraction);
  FilterSpec::fraction(f).validate();
  const WeightedGraph& g = b.source();
  const auto& values = b.values();
  const bool edges = b.target() == Target::Edges;
  auto secondary = [&](std::size_t i) {
    return edges ? g.edge(static_cast<EdgeIndex>(i)).weight : g.strength(static_cast<NodeIndex>(i));
  };
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (values[x] != values[y]) return stronger(b, values[x], values[y]);
    return secondary(x) > secondary(y);
  });
  std::vector<std::uint8_t> mask(values.size(), 0);
  const std::size_t keep = fraction_count(f, values.size());
  for (std::size_t i = 0; i < keep; ++i) mask[order[i]] = 1;
  return select(b, mask);
}

WeightedGraph apply_filter(const Backbone& b, const FilterSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case FilterKind::Boolean: return boolean_filter(b);
    case FilterKind::Threshold: return threshold_filter(b, spec.value);
    case FilterKind::Fraction: return fraction_filter(b, spec.value);
  }
  throw UsageError("unknown filter kind");
}

}  // namespace bb
