#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "backbone/backbone.hpp"
#include "backbone/compare.hpp"

namespace bb {

inline constexpr int kReportSchemaVersion = 1;

/// JSON documents share the shape
/// {"schema_version": 1, "kind": ..., "rows": [{"label": ..., "values": {...}}], "errors": [...]}.
/// Undefined values are written as null. Output is byte-stable for equal input.
std::string report_json(const ComparisonReport& report, std::string_view kind = "properties");
std::string report_json(const ProgressionSeries& series);

/// CSV with a `label` column followed by one column per measure (or sweep value).
void write_report_csv(std::ostream& out, const ComparisonReport& report);
void write_report_csv(std::ostream& out, const ProgressionSeries& series);

/// Tabular view of every scored item: source,target,weight,<value name> for
/// edge backbones and node,strength,<value name> for node backbones.
void write_scores_csv(std::ostream& out, const Backbone& backbone);

}  // namespace bb
