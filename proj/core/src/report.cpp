#include "backbone/report.hpp"

#include <cmath>

#include <json.hpp>

#include "backbone/edge_list.hpp"

namespace bb {

namespace {

using Json = nlohmann::ordered_json;

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json errors_json(const std::vector<ReportError>& errors) {
  Json out = Json::array();
  for (const auto& e : errors) out.push_back({{"label", e.label}, {"message", e.message}});
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_number(double x) { return std::isfinite(x) ? format_double(x) : std::string(); }

}  // namespace

std::string report_json(const ComparisonReport& report, std::string_view kind) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["kind"] = kind;
  doc["measures"] = report.measures;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json values = Json::object();
    for (std::size_t i = 0; i < report.measures.size(); ++i) values[report.measures[i]] = number(row.values[i]);
    rows.push_back({{"label", row.label}, {"values", values}});
  }
  doc["rows"] = rows;
  doc["errors"] = errors_json(report.errors);
  return doc.dump(2) + "\n";
}

std::string report_json(const ProgressionSeries& series) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["kind"] = "progression";
  doc["measure"] = series.measure;
  doc["filter"] = to_string(series.filter);
  doc["sweep"] = series.sweep;
  Json rows = Json::array();
  for (const auto& s : series.series) {
    Json values = Json::object();
    for (std::size_t i = 0; i < series.sweep.size(); ++i) values[format_double(series.sweep[i])] = number(s.values[i]);
    rows.push_back({{"label", s.label}, {"values", values}});
  }
  doc["rows"] = rows;
  doc["errors"] = errors_json(series.errors);
  return doc.dump(2) + "\n";
}

void write_report_csv(std::ostream& out, const ComparisonReport& report) {
  out << "label";
  for (const auto& m : report.measures) out << ',' << csv_field(m);
  out << '\n';
  for (const auto& row : report.rows) {
    out << csv_field(row.label);
    for (double v : row.values) out << ',' << csv_number(v);
    out << '\n';
  }
}

void write_report_csv(std::ostream& out, const ProgressionSeries& series) {
  out << "label";
  for (double v : series.sweep) out << ',' << format_double(v);
  out << '\n';
  for (const auto& s : series.series) {
    out << csv_field(s.label);
    for (double v : s.values) out << ',' << csv_number(v);
    out << '\n';
  }
}

void write_scores_csv(std::ostream& out, const Backbone& backbone) {
  const WeightedGraph& g = backbone.source();
  const auto& values = backbone.values();
  if (backbone.target() == Target::Edges) {
    out << "source,target,weight," << csv_field(backbone.value_name()) << '\n';
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      out << csv_field(g.label(edge.u)) << ',' << csv_field(g.label(edge.v)) << ',' << format_double(edge.weight)
          << ',' << format_double(values[e]) << '\n';
    }
  } else {
    out << "node,strength," << csv_field(backbone.value_name()) << '\n';
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      out << csv_field(g.label(v)) << ',' << format_double(g.strength(v)) << ',' << format_double(values[v]) << '\n';
    }
  }
}

}  // namespace bb
