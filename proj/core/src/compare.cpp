#include "backbone/compare.hpp"

#include <cmath>
#include <limits>

#include "backbone/edge_list.hpp"
#include "backbone/error.hpp"

namespace bb {

const ComparisonReport::Row* ComparisonReport::find(std::string_view label) const {
  for (const auto& row : rows) {
    if (row.label == label) return &row;
  }
  return nullptr;
}

double ComparisonReport::at(std::string_view label, std::string_view measure) const {
  const Row* row = find(label);
  if (!row) throw UsageError("report has no row '" + std::string(label) + "'");
  for (std::size_t i = 0; i < measures.size(); ++i) {
    if (measures[i] == measure) return row->values.at(i);
  }
  throw UsageError("report has no measure '" + std::string(measure) + "'");
}

const ProgressionSeries::Series* ProgressionSeries::find(std::string_view label) const {
  for (const auto& s : series) {
    if (s.label == label) return &s;
  }
  return nullptr;
}

const FilterSpec& FilterPlan::for_method(std::string_view name) const {
  auto it = overrides.find(name);
  return it == overrides.end() ? fallback : it->second;
}

namespace {

void require_compatible(const Backbone& b, const FilterSpec& spec) {
  spec.validate();
  if (!b.compatible_filters().contains(spec.kind)) {
    throw UsageError("method '" + b.method_name() + "' does not support the " + std::string(to_string(spec.kind)) +
                     " filter");
  }
}

std::vector<const MeasureEntry*> lookup(const Registry& registry, std::span<const std::string> measures) {
  std::vector<const MeasureEntry*> out;
  for (const auto& name : measures) out.push_back(&registry.measure(name));
  return out;
}

std::vector<double> evaluate(const std::vector<const MeasureEntry*>& entries, const WeightedGraph& original,
                             const WeightedGraph& backbone) {
  std::vector<double> values;
  values.reserve(entries.size());
  for (const MeasureEntry* m : entries) values.push_back(m->compute(original, backbone));
  return values;
}

}  // namespace

ComparisonReport properties(const Registry& registry, const WeightedGraph& g, std::span<const Backbone> backbones,
                            std::span<const std::string> measures, const FilterPlan& filter) {
  const auto entries = lookup(registry, measures);
  for (const Backbone& b : backbones) require_compatible(b, filter.for_method(b.method_name()));

  ComparisonReport report;
  report.measures.assign(measures.begin(), measures.end());
  report.rows.push_back({std::string(kOriginalLabel), evaluate(entries, g, g)});
  for (const Backbone& b : backbones) {
    try {
      const WeightedGraph filtered = apply_filter(b, filter.for_method(b.method_name()));
      report.rows.push_back({b.method_name(), evaluate(entries, g, filtered)});
    } catch (const DataError& e) {
      report.errors.push_back({b.method_name(), e.what()});
    }
  }
  return report;
}

ProgressionSeries properties_progression(const Registry& registry, const WeightedGraph& g,
                                         std::span<const Backbone> backbones, std::string_view measure,
                                         FilterKind kind, std::span<const double> sweep) {
  if (kind == FilterKind::Boolean) throw UsageError("progression needs a threshold or fraction filter");
  if (sweep.empty()) throw UsageError("progression sweep is empty");
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    FilterSpec{kind, sweep[i]}.validate();
    if (i > 0 && !(sweep[i] > sweep[i - 1])) throw UsageError("progression sweep must be strictly increasing");
  }
  const MeasureEntry& entry = registry.measure(measure);
  for (const Backbone& b : backbones) require_compatible(b, FilterSpec{kind, sweep.front()});

  ProgressionSeries out;
  out.measure = std::string(measure);
  out.filter = kind;
  out.sweep.assign(sweep.begin(), sweep.end());
  for (const Backbone& b : backbones) {
    ProgressionSeries::Series s{b.method_name(), {}};
    for (double v : sweep) {
      try {
        s.values.push_back(entry.compute(g, apply_filter(b, FilterSpec{kind, v})));
      } catch (const DataError& e) {
        s.values.push_back(std::numeric_limits<double>::quiet_NaN());
        out.errors.push_back({b.method_name(), "at " + format_double(v) + ": " + e.what()});
      }
    }
    out.series.push_back(std::move(s));
  }
  return out;
}

ComparisonReport distribution_ks_statistic(const WeightedGraph& g, std::span<const Backbone> backbones,
                                           DistributionKind kind, const FilterPlan& filter) {
  for (const Backbone& b : backbones) require_compatible(b, filter.for_method(b.method_name()));
  const auto reference = distribution_sample(g, kind);

  ComparisonReport report;
  report.measures.push_back("ks_" + std::string(to_string(kind)));
  for (const Backbone& b : backbones) {
    const WeightedGraph filtered = apply_filter(b, filter.for_method(b.method_name()));
    const auto sample = distribution_sample(filtered, kind);
    if (sample.empty() || reference.empty()) {
      report.errors.push_back({b.method_name(), "filtered backbone is empty"});
      continue;
    }
    report.rows.push_back({b.method_name(), {ks_statistic(reference, sample)}});
  }
  return report;
}

WeightedGraph consent(std::span<const WeightedGraph> backbones) {
  if (backbones.size() < 2) throw UsageError("consensus needs at least two backbones");
  const WeightedGraph& first = backbones.front();
  auto everywhere = [&](auto&& present) {
    for (std::size_t i = 1; i < backbones.size(); ++i) {
      if (!present(backbones[i])) return false;
    }
    return true;
  };

  GraphBuilder builder;
  for (const auto& label : first.labels()) {
    if (everywhere([&](const WeightedGraph& h) { return h.find(label).has_value(); })) builder.add_node(label);
  }
  for (EdgeIndex e = 0; e < first.edge_count(); ++e) {
    const Edge& edge = first.edge(e);
    const std::string& u = first.label(edge.u);
    const std::string& v = first.label(edge.v);
    if (everywhere([&](const WeightedGraph& h) { return h.find_edge(u, v).has_value(); })) {
      builder.add_edge(u, v, edge.weight);
    }
  }
  return builder.build();
}

}  // namespace bb
