#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "backbone/compare.hpp"
#include "backbone/edge_list.hpp"
#include "backbone/error.hpp"
#include "backbone/filters.hpp"
#include "backbone/metrics.hpp"
#include "backbone/parallel.hpp"
#include "backbone/report.hpp"
#include "charts.hpp"

namespace bb::cli {
namespace {

namespace fs = std::filesystem;

struct Config {
  std::string input;
  std::string format = "auto";
  std::vector<std::string> methods;
  std::vector<std::string> params;
  std::string filter;
  std::optional<double> value;
  std::vector<std::string> filter_for;
  std::vector<double> sweep;
  std::vector<std::string> properties;
  std::string output;
  std::string report;
  std::string chart;
  std::string scores;
  bool round_weights = false;
  bool sum_duplicates = false;
  std::size_t threads = 0;
  std::uint64_t seed = 0;
};

double parse_number(std::string_view text, std::string_view what) {
  double x = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, x);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return x;
}

EdgeListFormat parse_format(const std::string& name) {
  if (name == "auto") return EdgeListFormat::Auto;
  if (name == "csv") return EdgeListFormat::Csv;
  if (name == "txt") return EdgeListFormat::Whitespace;
  throw UsageError("unknown format '" + name + "' (expected csv or txt)");
}

/// `--param k=v` applies to every method; `--param method.k=v` to one.
MethodParams params_for(const Config& cfg, const std::string& method) {
  MethodParams p;
  p.round_weights = cfg.round_weights;
  p.seed = cfg.seed;
  std::vector<std::pair<std::string, double>> scoped;
  for (const auto& item : cfg.params) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    const double v = parse_number(std::string_view(item).substr(eq + 1), "parameter value");
    const auto dot = key.find('.');
    if (dot == std::string::npos) {
      p.values[key] = v;
    } else if (key.substr(0, dot) == method) {
      scoped.emplace_back(key.substr(dot + 1), v);
    }
  }
  for (auto& [k, v] : scoped) p.values[k] = v;
  return p;
}

FilterSpec parse_filter(const std::string& kind_name, std::optional<double> value) {
  const FilterKind kind = parse_filter_kind(kind_name);
  if (kind != FilterKind::Boolean && !value) {
    throw UsageError("the " + kind_name + " filter needs --value");
  }
  FilterSpec spec{kind, kind == FilterKind::Boolean ? 0.0 : *value};
  spec.validate();
  return spec;
}

/// "method=boolean" or "method=kind:value".
FilterPlan filter_plan(const Config& cfg, const std::string& default_kind) {
  FilterPlan plan(parse_filter(cfg.filter.empty() ? default_kind : cfg.filter, cfg.value));
  for (const auto& item : cfg.filter_for) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--filter-for expects method=kind[:value], got '" + item + "'");
    const std::string spec = item.substr(eq + 1);
    const auto colon = spec.find(':');
    std::optional<double> v;
    if (colon != std::string::npos) v = parse_number(std::string_view(spec).substr(colon + 1), "filter value");
    plan.overrides[item.substr(0, eq)] = parse_filter(spec.substr(0, colon), v);
  }
  return plan;
}

/// Expands "all" and category names into registered method names.
std::vector<std::string> expand_methods(const Registry& registry, const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  auto add = [&](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  for (const auto& name : requested) {
    bool group = false;
    for (const auto& m : registry.method_names()) {
      const MethodInfo& info = registry.method(m).info;
      if (name == "all" || name == to_string(info.category)) {
        add(m);
        group = true;
      }
    }
    if (!group) add(registry.method(name).info.name);
  }
  if (out.empty()) throw UsageError("no methods given");
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  if (!f) throw UsageError("failed writing '" + path + "'");
}

/// Prefixes the method name unless the message already carries it.
std::string tagged(const std::string& method, const std::string& message) {
  if (message.starts_with(method + ":")) return message;
  return method + ": " + message;
}

std::string csv_sibling(const std::string& report_path) {
  fs::path p(report_path);
  p.replace_extension(".csv");
  if (p == fs::path(report_path)) p += ".csv";
  return p.string();
}

class Session {
 public:
  Session(const Config& cfg, const Registry& registry, std::ostream& out, std::ostream& err)
      : cfg_(cfg), registry_(registry), out_(out), err_(err) {}

  WeightedGraph load() {
    if (cfg_.input.empty()) throw UsageError("--input is required");
    if (!fs::exists(cfg_.input)) throw DataError("input file '" + cfg_.input + "' does not exist");
    LoadOptions options{parse_format(cfg_.format), cfg_.sum_duplicates ? DuplicatePolicy::Sum : DuplicatePolicy::Error};
    LoadResult loaded = load_edge_list(cfg_.input, options);
    if (loaded.self_loops_dropped > 0) {
      err_ << "note: dropped " << loaded.self_loops_dropped << " self-loop(s)\n";
    }
    return loaded.graph;
  }

  /// Scores every method; failures become report errors so the other
  /// methods still run.
  std::vector<Backbone> score(const WeightedGraph& g, const std::vector<std::string>& methods,
                              std::vector<ReportError>& errors) {
    std::vector<Backbone> out;
    for (const auto& name : methods) {
      try {
        out.push_back(registry_.run(name, g, params_for(cfg_, name)));
        for (const auto& w : out.back().warnings()) err_ << "warning: " << tagged(name, w) << '\n';
      } catch (const MethodError& e) {
        errors.push_back({name, e.what()});
        err_ << "error: " << tagged(name, e.what()) << '\n';
      } catch (const DataError& e) {
        errors.push_back({name, e.what()});
        err_ << "error: " << tagged(name, e.what()) << '\n';
      }
    }
    return out;
  }

  void emit_report(const std::string& json, const std::function<void(std::ostream&)>& csv) {
    if (cfg_.report.empty()) {
      out_ << json;
      return;
    }
    write_text(cfg_.report, json);
    std::ostringstream s;
    csv(s);
    write_text(csv_sibling(cfg_.report), s.str());
  }

  void emit_chart(const std::string& svg) {
    if (cfg_.chart.empty()) return;
    try {
      write_text(cfg_.chart, svg);
    } catch (const Error& e) {
      err_ << "warning: chart not written: " << e.what() << '\n';
    }
  }

  int extract() {
    const WeightedGraph g = load();
    if (cfg_.methods.size() != 1) throw UsageError("extract takes exactly one --method");
    const std::string& name = registry_.method(cfg_.methods.front()).info.name;
    const FilterSpec spec = parse_filter(cfg_.filter.empty() ? "boolean" : cfg_.filter, cfg_.value);
    if (!registry_.method(name).info.filters.contains(spec.kind)) {
      throw UsageError("method '" + name + "' does not support the " + std::string(to_string(spec.kind)) + " filter");
    }
    const Backbone b = registry_.run(name, g, params_for(cfg_, name));
    for (const auto& w : b.warnings()) err_ << "warning: " << tagged(name, w) << '\n';
    const WeightedGraph filtered = apply_filter(b, spec);
    if (!cfg_.scores.empty()) {
      std::ostringstream s;
      write_scores_csv(s, b);
      write_text(cfg_.scores, s.str());
    }
    if (cfg_.output.empty() || cfg_.output == "-") {
      write_edge_list(out_, filtered, EdgeListFormat::Csv);
    } else {
      save_edge_list(filtered, cfg_.output, parse_format(cfg_.format == "auto" ? "auto" : cfg_.format));
    }
    err_ << name << ": kept " << filtered.node_count() << " nodes, " << filtered.edge_count() << " edges of "
         << g.node_count() << ", " << g.edge_count() << '\n';
    return kOk;
  }

  std::vector<std::string> measures(const std::vector<std::string>& fallback) const {
    const auto& chosen = cfg_.properties.empty() ? fallback : cfg_.properties;
    for (const auto& m : chosen) registry_.measure(m);
    return chosen;
  }

  int compare() {
    const WeightedGraph g = load();
    const auto methods = expand_methods(registry_, cfg_.methods);
    const auto measure_names = measures(registry_.measure_names());
    const FilterPlan plan = filter_plan(cfg_, "boolean");
    std::vector<ReportError> errors;
    const auto backbones = score(g, methods, errors);
    ComparisonReport report = properties(registry_, g, backbones, measure_names, plan);
    errors.insert(errors.end(), report.errors.begin(), report.errors.end());
    report.errors = std::move(errors);
    emit_report(report_json(report, "properties"), [&](std::ostream& s) { write_report_csv(s, report); });
    emit_chart(radar_svg(report));
    return kOk;
  }

  int progression() {
    const WeightedGraph g = load();
    const auto methods = expand_methods(registry_, cfg_.methods);
    const auto measure_names = measures({"node_fraction"});
    if (measure_names.size() != 1) throw UsageError("progression takes exactly one measure in --properties");
    const FilterKind kind = parse_filter_kind(cfg_.filter.empty() ? "fraction" : cfg_.filter);
    if (cfg_.sweep.empty()) throw UsageError("progression needs --sweep");
    std::vector<ReportError> errors;
    const auto backbones = score(g, methods, errors);
    ProgressionSeries series = properties_progression(registry_, g, backbones, measure_names.front(), kind, cfg_.sweep);
    errors.insert(errors.end(), series.errors.begin(), series.errors.end());
    series.errors = std::move(errors);
    emit_report(report_json(series), [&](std::ostream& s) { write_report_csv(s, series); });
    emit_chart(progression_svg(series));
    return kOk;
  }

  int distribution() {
    const WeightedGraph g = load();
    const auto methods = expand_methods(registry_, cfg_.methods);
    if (cfg_.properties.size() > 1) throw UsageError("distribution takes one of weights or degrees in --properties");
    const DistributionKind kind = parse_distribution(cfg_.properties.empty() ? "weights" : cfg_.properties.front());
    const FilterPlan plan = filter_plan(cfg_, "threshold");
    std::vector<ReportError> errors;
    const auto backbones = score(g, methods, errors);
    ComparisonReport report = distribution_ks_statistic(g, backbones, kind, plan);
    errors.insert(errors.end(), report.errors.begin(), report.errors.end());
    report.errors = std::move(errors);
    emit_report(report_json(report, "distribution"), [&](std::ostream& s) { write_report_csv(s, report); });
    if (!cfg_.chart.empty()) {
      std::vector<Sample> samples{{std::string(kOriginalLabel), distribution_sample(g, kind)}};
      for (const Backbone& b : backbones) {
        samples.push_back({b.method_name(), distribution_sample(apply_filter(b, plan.for_method(b.method_name())), kind)});
      }
      emit_chart(distribution_svg(samples, std::string(to_string(kind))));
    }
    return kOk;
  }

  int consensus() {
    const WeightedGraph g = load();
    const auto methods = expand_methods(registry_, cfg_.methods);
    const FilterPlan plan = filter_plan(cfg_, "threshold");
    std::vector<ReportError> errors;
    const auto backbones = score(g, methods, errors);
    std::vector<WeightedGraph> filtered;
    for (const Backbone& b : backbones) filtered.push_back(apply_filter(b, plan.for_method(b.method_name())));
    const WeightedGraph common = consent(filtered);

    ComparisonReport report;
    report.measures = {"nodes", "edges"};
    for (std::size_t i = 0; i < filtered.size(); ++i) {
      report.rows.push_back({backbones[i].method_name(),
                             {static_cast<double>(filtered[i].node_count()), static_cast<double>(filtered[i].edge_count())}});
    }
    report.rows.push_back({"consensus", {static_cast<double>(common.node_count()), static_cast<double>(common.edge_count())}});
    report.errors = std::move(errors);
    if (!cfg_.output.empty() && cfg_.output != "-") {
      save_edge_list(common, cfg_.output, parse_format(cfg_.format));
    }
    emit_report(report_json(report, "consensus"), [&](std::ostream& s) { write_report_csv(s, report); });
    return kOk;
  }

 private:
  const Config& cfg_;
  const Registry& registry_;
  std::ostream& out_;
  std::ostream& err_;
};

void add_common(CLI::App* cmd, Config& cfg, bool multi) {
  cmd->add_option("--input,-i", cfg.input, "Edge list (CSV with source,target,weight or whitespace .txt)");
  cmd->add_option("--format", cfg.format, "csv | txt | auto");
  if (multi) {
    cmd->add_option("--methods,--method,-m", cfg.methods, "Method names, categories or 'all'")->delimiter(',');
  } else {
    cmd->add_option("--method,-m", cfg.methods, "Method name");
  }
  cmd->add_option("--param,-p", cfg.params, "Method parameter key=value or method.key=value");
  cmd->add_option("--filter", cfg.filter, "boolean | threshold | fraction");
  cmd->add_option("--value", cfg.value, "Filter parameter");
  cmd->add_flag("--round-weights", cfg.round_weights, "Round weights for integer-count null models");
  cmd->add_flag("--sum-duplicates", cfg.sum_duplicates, "Add the weights of repeated edges");
  cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  cmd->add_option("--seed", cfg.seed, "Seed for randomized options");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Registry& registry) {
  Config cfg;
  CLI::App app{"Weighted network backbone extraction and comparison", "backbone"};
  app.require_subcommand(1);

  auto* extract = app.add_subcommand("extract", "Score one method and write the filtered backbone");
  add_common(extract, cfg, false);
  extract->add_option("--output,-o", cfg.output, "Backbone edge list path (default: standard output)");
  extract->add_option("--scores", cfg.scores, "Write every item with its value as CSV");

  auto* compare = app.add_subcommand("compare", "Property table of the original network and each backbone");
  auto* progression = app.add_subcommand("progression", "One property swept over thresholds or fractions");
  auto* distribution = app.add_subcommand("distribution", "KS statistic of weight or degree distributions");
  auto* consensus = app.add_subcommand("consensus", "Intersection of several filtered backbones");
  for (auto* cmd : {compare, progression, distribution, consensus}) {
    add_common(cmd, cfg, true);
    cmd->add_option("--report,-r", cfg.report, "JSON report path; CSV goes next to it");
    cmd->add_option("--filter-for", cfg.filter_for, "Per-method filter method=kind[:value]");
  }
  for (auto* cmd : {compare, progression, distribution}) {
    cmd->add_option("--properties", cfg.properties, "Measure names")->delimiter(',');
    cmd->add_option("--chart", cfg.chart, "SVG chart path");
  }
  progression->add_option("--sweep", cfg.sweep, "Filter values v1,v2,...")->delimiter(',');
  consensus->add_option("--output,-o", cfg.output, "Consensus edge list path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    set_thread_count(cfg.threads);
    Session session(cfg, registry, out, err);
    if (extract->parsed()) return session.extract();
    if (compare->parsed()) return session.compare();
    if (progression->parsed()) return session.progression();
    if (distribution->parsed()) return session.distribution();
    return session.consensus();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const MethodError& e) {
    err << "error: " << e.what() << '\n';
    return kMethod;
  }
}

}  // namespace bb::cli
