#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include "backbone/compare.hpp"
#include "backbone/edge_list.hpp"
#include "backbone/error.hpp"
#include "backbone/structural.hpp"
#include "method_table.hpp"
#include "oracles.hpp"

using namespace bb;

namespace {

WeightedGraph les_miserables() {
  return load_edge_list(std::filesystem::path(BACKBONE_DATA_DIR) / "les_miserables.csv").graph;
}

}  // namespace

TEST_CASE("registry reproduces the method table cell by cell") {
  const Registry& r = Registry::builtin();
  REQUIRE(r.method_names().size() == method_table().size());
  for (const MethodRow& row : method_table()) {
    CAPTURE(row.name);
    REQUIRE(r.has_method(row.name));
    const MethodInfo& info = r.method(row.name).info;
    CHECK(info.category == row.category);
    CHECK(info.weighted == row.weighted);
    CHECK(info.unweighted == row.unweighted);
    CHECK(info.filter_type == row.type);
    CHECK(info.scope == row.scope);
    CHECK(info.parameters == row.parameters);
    CHECK(info.filters.contains(FilterKind::Boolean) == row.boolean);
    CHECK(info.filters.contains(FilterKind::Fraction) == row.fraction);
    CHECK(info.filters.contains(FilterKind::Threshold) == row.threshold);
  }
}

TEST_CASE("every built-in method runs on Les Miserables and honours its registration") {
  const WeightedGraph g = les_miserables();
  const Registry& r = Registry::builtin();
  for (const auto& name : r.method_names()) {
    CAPTURE(name);
    MethodParams p;
    p.values["allow_unconverged"] = 1;
    const Backbone b = r.run(name, g, p);
    CHECK(b.method_name() == name);
    CHECK(b.compatible_filters() == r.method(name).info.filters);
  }
}

TEST_CASE("registry lookups and duplicates") {
  Registry r = Registry::with_builtins();
  CHECK_THROWS_AS(r.method("nope"), UsageError);
  try {
    r.method("nope");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("disparity") != std::string::npos);
  }
  CHECK_THROWS_AS(r.measure("nope"), UsageError);
  MethodInfo info;
  info.name = "disparity";
  info.filters = {FilterKind::Threshold};
  CHECK_THROWS_AS(r.register_method(info, [](const WeightedGraph& g, const MethodParams&) {
    return global_threshold(g);
  }), UsageError);
  CHECK_THROWS_AS(r.register_measure("density", [](const WeightedGraph&, const WeightedGraph&) { return 0.0; }),
                  UsageError);
}

TEST_CASE("registered methods and measures take part in comparisons") {
  Registry r = Registry::with_builtins();
  MethodInfo info;
  info.name = "random_score";
  info.title = "Random score";
  info.filters = {FilterKind::Fraction, FilterKind::Threshold};
  r.register_method(info, [](const WeightedGraph& g, const MethodParams& p) {
    std::mt19937_64 rng(p.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(g.edge_count());
    for (double& x : v) x = u(rng);
    return Backbone(g, "random_score", Target::Edges, "score", Direction::HigherIsStronger, v,
                    {FilterKind::Fraction, FilterKind::Threshold});
  });
  r.register_measure("node_fraction_copy", node_fraction);

  const WeightedGraph g = les_miserables();
  const std::vector<Backbone> backbones{r.run("random_score", g), r.run("edge_betweenness", g)};
  const std::vector<std::string> measures{"node_fraction", "node_fraction_copy", "density"};
  const ComparisonReport report = properties(r, g, backbones, measures, FilterPlan(FilterSpec::fraction(0.3)));
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].label == kOriginalLabel);
  CHECK(report.rows[1].label == "random_score");
  for (const auto& row : report.rows) CHECK(row.values[0] == row.values[1]);

  MethodInfo bad = info;
  bad.name = "bad_method";
  r.register_method(bad, [](const WeightedGraph& g, const MethodParams&) {
    return Backbone(g, "bad_method", Target::Edges, "p", Direction::LowerIsStronger,
                    std::vector<double>(g.edge_count(), 2.0), {FilterKind::Fraction, FilterKind::Threshold});
  });
  CHECK_THROWS_AS(r.run("bad_method", g), MethodError);
}

TEST_CASE("properties report") {
  const WeightedGraph g = les_miserables();
  const Registry& r = Registry::builtin();
  const std::vector<std::string> measures{"density", "reachability"};
  const ComparisonReport empty = properties(r, g, {}, measures, FilterPlan());
  CHECK(empty.rows.size() == 1);

  const Backbone everything(g, "everything", Target::Edges, std::string(kBooleanValue), Direction::HigherIsStronger,
                            std::vector<double>(g.edge_count(), 1.0), {FilterKind::Boolean});
  const std::vector<Backbone> same{everything};
  const ComparisonReport rep = properties(r, g, same, measures, FilterPlan());
  CHECK(rep.rows[1].values == rep.rows[0].values);
  CHECK(rep.at("everything", "density") == rep.at(kOriginalLabel, "density"));

  const std::vector<std::string> unknown{"diameter"};
  CHECK_THROWS_AS(properties(r, g, same, unknown, FilterPlan()), UsageError);
  const std::vector<Backbone> scored{global_threshold(g)};
  CHECK_THROWS_AS(properties(r, g, scored, measures, FilterPlan()), UsageError);
}

TEST_CASE("progression series") {
  const WeightedGraph g = les_miserables();
  const Registry& r = Registry::builtin();
  const std::vector<Backbone> backbones{global_threshold(g), high_salience_skeleton(g)};
  const std::vector<double> sweep{0.05, 0.1, 0.2, 0.5, 1.0};
  const ProgressionSeries s = properties_progression(r, g, backbones, "node_fraction", FilterKind::Fraction, sweep);
  REQUIRE(s.series.size() == 2);
  for (const auto& series : s.series) {
    REQUIRE(series.values.size() == sweep.size());
    for (std::size_t i = 1; i < series.values.size(); ++i) CHECK(series.values[i - 1] <= series.values[i]);
  }
  const std::vector<double> one{0.01};
  CHECK(properties_progression(r, g, backbones, "node_fraction", FilterKind::Fraction, one).sweep.size() == 1);
  const std::vector<double> unsorted{0.2, 0.1};
  CHECK_THROWS_AS(properties_progression(r, g, backbones, "node_fraction", FilterKind::Fraction, unsorted), UsageError);
  const std::vector<double> bad{0.0, 0.1};
  CHECK_THROWS_AS(properties_progression(r, g, backbones, "node_fraction", FilterKind::Fraction, bad), UsageError);
  CHECK_THROWS_AS(properties_progression(r, g, backbones, "node_fraction", FilterKind::Boolean, sweep), UsageError);
  const auto again = properties_progression(r, g, backbones, "node_fraction", FilterKind::Fraction, sweep);
  for (std::size_t k = 0; k < 2; ++k) CHECK(again.series[k].values == s.series[k].values);
}

TEST_CASE("distribution KS statistics") {
  const WeightedGraph g = les_miserables();
  const Backbone all_edges = global_threshold(g);
  FilterPlan plan(FilterSpec::threshold(0.0));
  const std::vector<Backbone> one{all_edges};
  const ComparisonReport zero = distribution_ks_statistic(g, one, DistributionKind::Weights, plan);
  CHECK(zero.rows.at(0).values.at(0) == 0.0);

  plan.overrides["global_threshold"] = FilterSpec::threshold(1e9);
  const ComparisonReport empty = distribution_ks_statistic(g, one, DistributionKind::Degrees, plan);
  CHECK(empty.rows.empty());
  CHECK(empty.errors.size() == 1);
}

TEST_CASE("consent") {
  const WeightedGraph a = oracle::from_edges({{"a", "b", 1}, {"b", "c", 2}, {"c", "d", 3}});
  const WeightedGraph b = oracle::from_edges({{"a", "b", 1}, {"c", "d", 3}, {"d", "e", 1}});
  const WeightedGraph c = oracle::from_edges({{"x", "y", 1}});
  CHECK_THROWS_AS(consent(std::vector<WeightedGraph>{a}), UsageError);
  CHECK(consent(std::vector<WeightedGraph>{a, a}) == a);
  CHECK(consent(std::vector<WeightedGraph>{a, c}).edge_count() == 0);
  const WeightedGraph ab = consent(std::vector<WeightedGraph>{a, b});
  CHECK(ab.edge_count() == 2);
  CHECK(ab.node_count() == 4);
  CHECK(consent(std::vector<WeightedGraph>{b, a}) == ab);

  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedGraph g = oracle::random_connected(rng, 8, 0.5, false);
    std::vector<WeightedGraph> parts;
    for (const Backbone& bb : {maximum_spanning_tree(g), metric_backbone(g), primary_linkage(g)}) {
      parts.push_back(boolean_filter(bb));
    }
    const WeightedGraph common = consent(parts);
    for (const auto& p : parts) {
      for (EdgeIndex e = 0; e < common.edge_count(); ++e)
        CHECK(p.find_edge(common.key(e).u, common.key(e).v).has_value());
      for (const auto& label : common.labels()) CHECK(p.find(label).has_value());
    }
    std::vector<WeightedGraph> shuffled = parts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(consent(shuffled) == common);
  }
}
