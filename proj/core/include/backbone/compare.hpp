#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "backbone/backbone.hpp"
#include "backbone/filters.hpp"
#include "backbone/graph.hpp"
#include "backbone/metrics.hpp"
#include "backbone/registry.hpp"

namespace bb {

inline constexpr std::string_view kOriginalLabel = "Original";

struct ReportError {
  std::string label;
  std::string message;
};

/// Rows of measure values; the first row of a properties() report is the
/// original network. Values follow the order of `measures`.
struct ComparisonReport {
  struct Row {
    std::string label;
    std::vector<double> values;
  };

  std::vector<std::string> measures;
  std::vector<Row> rows;
  std::vector<ReportError> errors;

  const Row* find(std::string_view label) const;
  double at(std::string_view label, std::string_view measure) const;
};

/// One measure swept over filter parameters, one series per method.
/// Points where the measure is undefined hold NaN and add an error entry.
struct ProgressionSeries {
  struct Series {
    std::string label;
    std::vector<double> values;
  };

  std::string measure;
  FilterKind filter = FilterKind::Fraction;
  std::vector<double> sweep;
  std::vector<Series> series;
  std::vector<ReportError> errors;

  const Series* find(std::string_view label) const;
};

/// Filter used for each backbone: per-method overrides, else the default.
struct FilterPlan {
  FilterSpec fallback;
  std::map<std::string, FilterSpec, std::less<>> overrides;

  FilterPlan(FilterSpec spec = FilterSpec::boolean()) : fallback(spec) {}
  const FilterSpec& for_method(std::string_view name) const;
};

/// Original row followed by one row per backbone. Unknown measures and
/// incompatible filters throw UsageError before any work; a measure that is
/// undefined on a filtered backbone (say, density of a single node) drops
/// that row into `errors`.
ComparisonReport properties(const Registry& registry, const WeightedGraph& g, std::span<const Backbone> backbones,
                            std::span<const std::string> measures, const FilterPlan& filter);

/// Throws UsageError on an empty or non-increasing sweep, a sweep value that
/// the filter kind rejects, or a Boolean filter kind.
ProgressionSeries properties_progression(const Registry& registry, const WeightedGraph& g,
                                         std::span<const Backbone> backbones, std::string_view measure,
                                         FilterKind kind, std::span<const double> sweep);

/// KS statistic between the sample of g and of each filtered backbone,
/// reported as a single column named "ks_<kind>". Empty filtered backbones
/// become entries in `errors`.
ComparisonReport distribution_ks_statistic(const WeightedGraph& g, std::span<const Backbone> backbones,
                                           DistributionKind kind, const FilterPlan& filter);

/// Intersection of edge sets and node sets. Throws UsageError for fewer
/// than two inputs.
WeightedGraph consent(std::span<const WeightedGraph> backbones);

}  // namespace bb
