// Acceptance run: one PASS/FAIL line per criterion, followed by the failing
// checks. Checks marked "known" are documented as unattainable with the
// bundled data; the exit status is nonzero only for other failures.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "backbone/compare.hpp"
#include "backbone/edge_list.hpp"
#include "backbone/error.hpp"
#include "backbone/filters.hpp"
#include "backbone/metrics.hpp"
#include "backbone/registry.hpp"
#include "backbone/statistical.hpp"
#include "backbone/structural.hpp"
#include "cli.hpp"
#include "method_table.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace bb;

namespace {

struct Check {
  std::string what;
  bool pass = false;
  std::string known;
};

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void check(std::string what, bool pass, std::string known = {}) {
    checks_.push_back({std::move(what), pass, std::move(known)});
  }

  void near(const std::string& what, double actual, double expected, double tol, std::string known = {}) {
    std::ostringstream s;
    s << what << " = " << format_double(actual) << " (expected " << format_double(expected) << " +/- "
      << format_double(tol) << ")";
    check(s.str(), std::isfinite(actual) && std::abs(actual - expected) <= tol + 1e-12, std::move(known));
  }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
  }

  bool unexplained_failure() const {
    return std::any_of(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass && c.known.empty(); });
  }

  void print(std::ostream& out) const {
    out << (passed() ? "PASS" : "FAIL") << " " << title_ << " (" << checks_.size() << " checks)\n";
    for (const Check& c : checks_) {
      if (c.pass) continue;
      out << "    failed: " << c.what;
      if (!c.known.empty()) out << " [known: " << c.known << "]";
      out << "\n";
    }
  }

 private:
  std::string title_;
  std::vector<Check> checks_;
};

const char* const kNoUsAir = "US air dataset is not bundled";

std::optional<WeightedGraph> load_optional(const fs::path& dir, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    if (fs::exists(dir / name)) return load_edge_list(dir / name).graph;
  }
  return std::nullopt;
}

MethodParams params_for(const std::string& name) {
  MethodParams p;
  if (name == "doubly_stochastic") p.values["allow_unconverged"] = 1;
  return p;
}

std::vector<Backbone> run_methods(const WeightedGraph& g, const std::vector<std::string>& names) {
  std::vector<Backbone> out;
  for (const std::string& name : names) out.push_back(Registry::builtin().run(name, g, params_for(name)));
  return out;
}

std::size_t component_count(const WeightedGraph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count;
}

bool is_subgraph(const WeightedGraph& small, const WeightedGraph& big) {
  for (EdgeIndex e = 0; e < small.edge_count(); ++e) {
    const Edge& ed = small.edge(e);
    if (!big.find_edge(small.label(ed.u), small.label(ed.v))) return false;
  }
  for (const std::string& label : small.labels()) {
    if (!big.find(label)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

void ingestion(Criterion& c, const WeightedGraph& les, const std::optional<WeightedGraph>& air) {
  c.check("Les Miserables n = " + std::to_string(les.node_count()) + " (expected 77)", les.node_count() == 77);
  c.check("Les Miserables m = " + std::to_string(les.edge_count()) + " (expected 254)", les.edge_count() == 254);
  c.near("Les Miserables <k>", average_degree(les), 6.5, 0.05,
         "2m/n = 508/77 = 6.597 for n = 77, m = 254; the tabulated 6.5 is inconsistent with its own n and m");
  c.near("Les Miserables density", density(les), 0.087, 0.001);
  if (!air) {
    c.check("US air loaded", false, kNoUsAir);
    return;
  }
  c.check("US air n = " + std::to_string(air->node_count()) + " (expected 380)", air->node_count() == 380);
  c.check("US air m = " + std::to_string(air->edge_count()) + " (expected 9678)", air->edge_count() == 9678);
  c.near("US air <k>", average_degree(*air), 50.9, 0.1);
  c.near("US air density", density(*air), 0.134, 0.001);
}

void structural_properties(Criterion& c, const std::optional<WeightedGraph>& air) {
  if (!air) {
    c.check("US air loaded", false, kNoUsAir);
    return;
  }
  struct Expected {
    const char* method;
    double reach, nodes, edges, weight, dens, degree;
  };
  const std::vector<Expected> table = {
      {"h_backbone", 1, 0.80, 0.26, 0.98, 0.0544, 16.5},
      {"maximum_spanning_tree", 1, 1, 0.03, 0.18, 0.0053, 1.99},
      {"metric_backbone", 1, 1, 0.06, 0.50, 0.0094, 3.55},
      {"ultrametric_backbone", 1, 1, 0.03, 0.18, 0.0053, 1.99},
      {"pmfg", 1, 1, 0.09, 0.35, 0.0134, 5.0},
      {"doubly_stochastic", 0.98, 0.92, 0.63, 0.83, 0.1, 35.0},
      {"primary_linkage", 0.38, 1, 0.03, 0.17, 0.0052, 1.9},
      {"high_salience_skeleton", 0.1, 0.91, 0.03, 0.09, 0.0053, 1.8},
  };
  std::vector<std::string> names;
  for (const Expected& e : table) names.push_back(e.method);
  const std::vector<Backbone> backbones = run_methods(*air, names);
  const std::vector<std::string> measures = {"reachability", "node_fraction", "edge_fraction",
                                             "weight_fraction", "density",      "average_degree"};
  const ComparisonReport report = properties(Registry::builtin(), *air, backbones, measures, FilterPlan());
  for (const ReportError& err : report.errors) c.check(err.label + ": " + err.message, false);
  for (const Expected& e : table) {
    if (!report.find(e.method)) continue;
    const std::string m = e.method;
    const bool ds = m == "doubly_stochastic";
    const auto value = [&](const char* measure) { return report.at(m, measure); };
    if (ds) {
      c.near(m + " reachability", value("reachability"), e.reach, 0.05);
    } else if (e.reach == 1) {
      c.check(m + " reachability = " + format_double(value("reachability")) + " (expected exactly 1)",
              value("reachability") == 1.0);
    } else {
      c.near(m + " reachability", value("reachability"), e.reach, 0.02);
    }
    const double frac_tol = ds ? 0.05 : 0.02;
    c.near(m + " node fraction", value("node_fraction"), e.nodes, frac_tol);
    c.near(m + " edge fraction", value("edge_fraction"), e.edges, frac_tol);
    c.near(m + " weight fraction", value("weight_fraction"), e.weight, frac_tol);
    c.near(m + " density", value("density"), e.dens, ds ? 0.05 : 0.001);
    c.near(m + " average degree", value("average_degree"), e.degree, ds ? 0.05 : 0.3);
  }
}

void node_fraction_progression(Criterion& c, const std::optional<WeightedGraph>& air) {
  if (!air) {
    c.check("US air loaded", false, kNoUsAir);
    return;
  }
  const std::vector<double> sweep = {0.01, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45};
  const std::map<std::string, std::vector<double>> table = {
      {"global_threshold", {0.09, 0.22, 0.37, 0.52, 0.65, 0.77, 0.86, 0.91, 0.95, 0.97}},
      {"high_salience_skeleton", {0.3, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}},
      {"doubly_stochastic", {0.31, 0.78, 0.83, 0.85, 0.85, 0.86, 0.86, 0.87, 0.87, 0.88}},
      {"global_sparsification", {0.15, 0.23, 0.29, 0.35, 0.38, 0.45, 0.50, 0.55, 0.62, 0.67}},
      {"edge_betweenness", {0.40, 0.77, 0.96, 0.99, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00}},
  };
  std::vector<std::string> names;
  for (const auto& [name, row] : table) names.push_back(name);
  const std::vector<Backbone> backbones = run_methods(*air, names);
  const ProgressionSeries series =
      properties_progression(Registry::builtin(), *air, backbones, "node_fraction", FilterKind::Fraction, sweep);
  for (const ReportError& err : series.errors) c.check(err.label + ": " + err.message, false);
  for (const auto& [name, row] : table) {
    const ProgressionSeries::Series* s = series.find(name);
    c.check(name + " series present", s != nullptr);
    if (!s) continue;
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      c.near(name + " node fraction at " + format_double(sweep[i]), s->values[i], row[i], 0.03);
    }
  }
  const auto point = [&](const std::string& name, std::size_t i) {
    const ProgressionSeries::Series* s = series.find(name);
    return s ? s->values[i] : std::nan("");
  };
  c.check("high_salience_skeleton keeps every node at edge fraction 0.05", point("high_salience_skeleton", 1) == 1.0);
  c.check("edge_betweenness keeps every node at edge fraction 0.20", point("edge_betweenness", 4) == 1.0);
  c.check("global_threshold node fraction <= 0.25 at edge fraction 0.05", point("global_threshold", 1) <= 0.25);
}

void ks_statistics(Criterion& c, const std::optional<WeightedGraph>& air) {
  if (!air) {
    c.check("US air loaded", false, kNoUsAir);
    return;
  }
  const std::vector<std::string> names = {"global_threshold", "marginal_likelihood", "noise_corrected",
                                          "disparity",        "ecm",                 "lans"};
  const std::map<std::string, std::pair<double, double>> table = {
      {"global_threshold", {0.80, 0.40}}, {"marginal_likelihood", {0.55, 0.41}}, {"noise_corrected", {0.51, 0.54}},
      {"disparity", {0.70, 0.49}},        {"ecm", {0.32, 0.55}},                 {"lans", {0.66, 0.66}},
  };
  const std::vector<Backbone> backbones = run_methods(*air, names);
  FilterPlan plan(FilterSpec::threshold(0.05));
  plan.overrides["global_threshold"] = FilterSpec::threshold(7000);
  for (DistributionKind kind : {DistributionKind::Weights, DistributionKind::Degrees}) {
    const ComparisonReport report = distribution_ks_statistic(*air, backbones, kind, plan);
    const std::string column = "ks_" + std::string(to_string(kind));
    for (const ReportError& err : report.errors) c.check(err.label + ": " + err.message, false);
    std::string best;
    double best_value = INFINITY;
    for (const std::string& name : names) {
      if (!report.find(name)) continue;
      const double v = report.at(name, column);
      const auto& [w, d] = table.at(name);
      c.near(name + " " + column, v, kind == DistributionKind::Weights ? w : d, 0.05);
      if (v < best_value) {
        best_value = v;
        best = name;
      }
    }
    const std::string want = kind == DistributionKind::Weights ? "ecm" : "marginal_likelihood";
    c.check("smallest " + column + " is " + want + " (got " + best + ")", best == want);
  }
}

void consensus(Criterion& c, const std::optional<WeightedGraph>& air) {
  if (!air) {
    c.check("US air loaded", false, kNoUsAir);
    return;
  }
  const std::vector<std::string> names = {"disparity", "noise_corrected", "marginal_likelihood", "ecm", "lans"};
  std::vector<WeightedGraph> filtered;
  for (const Backbone& b : run_methods(*air, names)) filtered.push_back(threshold_filter(b, 0.05));
  const WeightedGraph common = consent(filtered);
  c.near("consensus nodes", static_cast<double>(common.node_count()), 343, 0.05 * 343);
  c.near("consensus edges", static_cast<double>(common.edge_count()), 714, 0.05 * 714);
}

void toy_example(Criterion& c, const WeightedGraph& les) {
  const Backbone hss = Registry::builtin().run("high_salience_skeleton", les);
  const WeightedGraph kept = boolean_filter(hss);
  const double removed = 1.0 - static_cast<double>(kept.edge_count()) / static_cast<double>(les.edge_count());
  c.near("boolean filter share of edges removed", removed, 0.70, 0.03);
  c.check("boolean filter drops at least one node (kept " + std::to_string(kept.node_count()) + ")",
          kept.node_count() < les.node_count());
  const WeightedGraph above = threshold_filter(hss, 0.7);
  c.check("threshold 0.7 keeps all 77 nodes (kept " + std::to_string(above.node_count()) + ")",
          above.node_count() == 77);
  const WeightedGraph top = fraction_filter(hss, 0.15);
  c.check("fraction 0.15 keeps 45 nodes (kept " + std::to_string(top.node_count()) + ")", top.node_count() == 45);
  c.check("fraction 0.15 keeps round(0.15 * 254) = 38 edges (kept " + std::to_string(top.edge_count()) + ")",
          top.edge_count() == 38);
  c.check("fraction 0.15 backbone has more than one component", component_count(top) > 1);
}

// ---------------------------------------------------------------------------

void path_containment(Criterion& c) {
  std::mt19937_64 rng(2024);
  int bad_mst = 0, bad_metric = 0, bad_ultra = 0, bad_nesting = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedGraph g = oracle::random_connected(rng, 2 + trial % 5, 0.45, trial % 2 == 0, 5);
    const auto sum = oracle::all_pairs_sum(g);
    const auto minimax = oracle::all_pairs_minimax(g);
    const auto mst = maximum_spanning_tree(g).boolean_mask();
    const auto ultra = ultrametric_backbone(g).boolean_mask();
    const auto metric = metric_backbone(g).boolean_mask();
    double tree_weight = 0.0;
    std::size_t tree_edges = 0;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      const double d = 1.0 / ed.weight;
      const bool on_metric = std::abs(sum[ed.u][ed.v] - d) <= 1e-12 * d;
      const bool on_ultra = std::abs(minimax[ed.u][ed.v] - d) <= 1e-12 * d;
      bad_metric += (metric[e] != 0) != on_metric;
      bad_ultra += (ultra[e] != 0) != on_ultra;
      bad_nesting += (mst[e] && !ultra[e]) || (ultra[e] && !metric[e]);
      if (mst[e]) {
        tree_weight += ed.weight;
        ++tree_edges;
      }
    }
    const double best = oracle::max_spanning_forest_weight(g);
    bad_mst += tree_edges != g.node_count() - 1 || std::abs(tree_weight - best) > 1e-9 * best;
  }
  c.check("(a) maximum spanning tree weight equals the exhaustive optimum on 200 graphs", bad_mst == 0);
  c.check("(a) metric backbone equals the Floyd-Warshall shortest-path edges", bad_metric == 0);
  c.check("(a) ultrametric backbone equals the Floyd-Warshall minimax edges", bad_ultra == 0);
  c.check("(a) MST within ultrametric within metric", bad_nesting == 0);
}

void pmfg_planarity(Criterion& c) {
  std::mt19937_64 rng(77);
  int nonplanar = 0, too_many = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const WeightedGraph g = oracle::random_graph(rng, n, 0.3 + 0.05 * (trial % 10));
    const auto mask = pmfg(g).boolean_mask();
    std::vector<std::pair<int, int>> kept;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (mask[e]) kept.emplace_back(static_cast<int>(g.edge(e).u), static_cast<int>(g.edge(e).v));
    }
    nonplanar += !oracle::planar(n, kept);
    too_many += kept.size() > 3 * (n - 2);
  }
  c.check("(b) PMFG is planar by the independent planarity oracle, n <= 12", nonplanar == 0);
  c.check("(b) PMFG keeps at most 3(n-2) edges", too_many == 0);
}

void ecm_oracle(Criterion& c) {
  int bad_residual = 0, unconverged_oracle = 0, compared = 0;
  double worst = 0.0;
  for (const WeightedGraph& g : oracle::ecm_interior_graphs(30, 5150)) {
    const EcmFit fit = ecm_fit(g);
    bad_residual += !(fit.residual <= 1e-8);
    const oracle::EcmSolution ref = oracle::ecm_coordinate(g);
    unconverged_oracle += !ref.converged;
    const Backbone b = ecm(g);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      worst = std::max(worst, std::abs(b.value(e) - ref.p_value(ed.u, ed.v, ed.weight)));
      ++compared;
    }
  }
  c.check("(c) ECM fit residual <= 1e-8 on 30 graphs with n <= 6", bad_residual == 0);
  c.check("(c) coordinate-solve oracle converged", unconverged_oracle == 0);
  c.check("(c) ECM p-values within 1e-6 of the oracle (" + std::to_string(compared) + " edges, worst " +
              format_double(worst) + ")",
          compared > 0 && worst <= 1e-6);
}

void reachability_oracle(Criterion& c) {
  std::mt19937_64 rng(91);
  int bad = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const WeightedGraph g = oracle::random_graph(rng, 2 + trial % 6, 0.1 + 0.1 * (trial % 5));
    bad += std::abs(reachability(g) - oracle::reachability(g)) > 1e-12;
  }
  c.check("(d) reachability equals pair enumeration on 300 graphs with n <= 7", bad == 0);
}

void ks_oracle(Criterion& c) {
  std::mt19937_64 rng(4242);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> size(1, 40), small(0, 9);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> a(size(rng)), b(size(rng));
    for (double& x : a) x = trial % 2 ? small(rng) : normal(rng);
    for (double& x : b) x = trial % 2 ? small(rng) : normal(rng) + 0.3;
    worst = std::max(worst, std::abs(ks_statistic(a, b) - oracle::ks(a, b)));
  }
  c.check("(e) KS statistic within 1e-12 of the double-loop oracle on 100 pairs (worst " + format_double(worst) + ")",
          worst <= 1e-12);
}

void filters_and_registry(Criterion& c) {
  std::mt19937_64 rng(13);
  int not_nested = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedGraph g = oracle::random_connected(rng, 5 + trial % 8, 0.4, true, 9);
    for (const Backbone& b : {global_threshold(g), disparity(g), high_salience_skeleton(g), degree_scores(g),
                              global_sparsification(g)}) {
      WeightedGraph previous;
      for (double f : {0.05, 0.1, 0.25, 0.5, 0.75, 1.0}) {
        const WeightedGraph cur = fraction_filter(b, f);
        not_nested += !is_subgraph(previous, cur) || !is_subgraph(cur, g);
        previous = cur;
      }
      std::vector<double> cuts = b.values();
      std::sort(cuts.begin(), cuts.end());
      if (!b.is_p_value()) std::reverse(cuts.begin(), cuts.end());
      previous = WeightedGraph();
      for (double t : cuts) {
        const WeightedGraph cur = threshold_filter(b, b.is_p_value() ? std::nextafter(t, INFINITY) : t);
        not_nested += !is_subgraph(previous, cur) || !is_subgraph(cur, g);
        previous = cur;
      }
    }
  }
  c.check("(f) fraction and threshold filters are nested and return subgraphs", not_nested == 0);

  const Registry& r = Registry::builtin();
  int mismatched = 0;
  for (const MethodRow& row : method_table()) {
    if (!r.has_method(row.name)) {
      ++mismatched;
      continue;
    }
    const MethodInfo& info = r.method(row.name).info;
    mismatched += info.category != row.category || info.weighted != row.weighted ||
                  info.unweighted != row.unweighted || info.filter_type != row.type || info.scope != row.scope ||
                  info.parameters != row.parameters || info.filters.contains(FilterKind::Boolean) != row.boolean ||
                  info.filters.contains(FilterKind::Fraction) != row.fraction ||
                  info.filters.contains(FilterKind::Threshold) != row.threshold;
  }
  c.check("(f) registry matches the method and filter tables (" + std::to_string(mismatched) + " rows differ)",
          mismatched == 0 && r.method_names().size() == method_table().size());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs a command in an empty directory and returns its exit code, stdout and
// every file it wrote, concatenated in name order.
std::string run_capture(std::vector<std::string> args, const fs::path& dir, const std::string& threads) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (std::string& a : args) {
    if (a.rfind("@", 0) == 0) a = (dir / a.substr(1)).string();
  }
  args.push_back("--threads");
  args.push_back(threads);
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  std::string all = "exit " + std::to_string(code) + "\n" + out.str();
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& f : files) all += "\n== " + f.filename().string() + "\n" + slurp(f);
  return all;
}

void determinism(Criterion& c, const fs::path& les_path) {
  const std::string in = les_path.string();
  const std::vector<std::vector<std::string>> commands = {
      {"extract", "-i", in, "-m", "high_salience_skeleton", "--filter", "fraction", "--value", "0.15", "-o",
       "@backbone.csv", "--scores", "@scores.csv"},
      {"extract", "-i", in, "-m", "edge_betweenness", "--filter", "threshold", "--value", "10"},
      {"compare", "-i", in, "--methods", "all", "--param", "doubly_stochastic.allow_unconverged=1", "--filter",
       "fraction", "--value", "0.2", "--filter-for", "maximum_spanning_tree=boolean", "--filter-for",
       "metric_backbone=boolean", "--filter-for", "ultrametric_backbone=boolean", "--filter-for", "pmfg=boolean",
       "--filter-for", "h_backbone=boolean", "--filter-for", "primary_linkage=boolean", "--filter-for",
       "mla=boolean", "-r", "@report.json", "--chart", "@radar.svg"},
      {"progression", "-i", in, "--methods", "high_salience_skeleton,edge_betweenness,global_threshold", "--sweep",
       "0.01,0.05,0.1,0.2,0.4", "-r", "@progression.json", "--chart", "@line.svg"},
      {"distribution", "-i", in, "--methods", "disparity,noise_corrected,global_threshold", "--value", "0.05",
       "--filter-for", "global_threshold=threshold:3", "--properties", "degrees", "-r", "@ks.json", "--chart",
       "@cdf.svg"},
      {"consensus", "-i", in, "--methods", "disparity,lans,noise_corrected", "--value", "0.2", "-o",
       "@consensus.csv", "-r", "@consensus.json"},
  };
  const fs::path base = fs::temp_directory_path() / ("backbone_acceptance_" + std::to_string(::getpid()));
  for (const auto& cmd : commands) {
    const std::string first = run_capture(cmd, base / "first", "1");
    const std::string second = run_capture(cmd, base / "second", "4");
    const bool ok = first.rfind("exit 0\n", 0) == 0 && first == second;
    c.check("(g) " + cmd.front() + " " + cmd[4] + ": identical output with 1 and 4 threads", ok);
  }
  fs::remove_all(base);
}

}  // namespace

int main(int argc, char** argv) {
  fs::path data = BACKBONE_DATA_DIR;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--data") data = argv[i + 1];
  }
  const fs::path les_path = data / "les_miserables.csv";
  WeightedGraph les;
  std::optional<WeightedGraph> air;
  try {
    les = load_edge_list(les_path).graph;
    air = load_optional(data, {"us_air.csv", "us_air.txt"});
  } catch (const Error& e) {
    std::cerr << "cannot load datasets: " << e.what() << "\n";
    return 2;
  }

  std::vector<Criterion> results;
  const auto run = [&](std::string title, auto&& body) {
    Criterion c(std::move(title));
    try {
      body(c);
    } catch (const std::exception& e) {
      c.check(std::string("unexpected exception: ") + e.what(), false);
    }
    c.print(std::cout);
    std::cout.flush();
    results.push_back(std::move(c));
  };

  run("1 ingestion matches the dataset table", [&](Criterion& c) { ingestion(c, les, air); });
  run("2 structural backbone properties on US air", [&](Criterion& c) { structural_properties(c, air); });
  run("3 node-fraction progression on US air", [&](Criterion& c) { node_fraction_progression(c, air); });
  run("4 KS statistics on US air", [&](Criterion& c) { ks_statistics(c, air); });
  run("5 consensus of statistical backbones on US air", [&](Criterion& c) { consensus(c, air); });
  run("6 high salience skeleton on Les Miserables", [&](Criterion& c) { toy_example(c, les); });
  run("7 property suite", [&](Criterion& c) {
    path_containment(c);
    pmfg_planarity(c);
    ecm_oracle(c);
    reachability_oracle(c);
    ks_oracle(c);
    filters_and_registry(c);
    determinism(c, les_path);
  });

  const bool unexplained =
      std::any_of(results.begin(), results.end(), [](const Criterion& c) { return c.unexplained_failure(); });
  return unexplained ? 1 : 0;
}
