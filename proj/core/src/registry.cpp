#include "backbone/registry.hpp"

#include "backbone/error.hpp"
#include "backbone/hybrid.hpp"
#include "backbone/metrics.hpp"
#include "backbone/statistical.hpp"
#include "backbone/structural.hpp"

namespace bb {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Statistical: return "statistical";
    case Category::Structural: return "structural";
    case Category::Hybrid: return "hybrid";
  }
  return "?";
}

std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::Local: return "local";
    case Scope::Global: return "global";
    case Scope::LocalAndGlobal: return "local+global";
  }
  return "?";
}

namespace {

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

constexpr FilterSet kScored{FilterKind::Fraction, FilterKind::Threshold};
constexpr FilterSet kBooleanOnly{FilterKind::Boolean};
constexpr FilterSet kAll{FilterKind::Boolean, FilterKind::Fraction, FilterKind::Threshold};

MethodInfo info(std::string name, std::string title, Category category, bool unweighted, Target type, Scope scope,
                std::vector<std::string> parameters, FilterSet filters) {
  return MethodInfo{std::move(name), std::move(title), category, true,   unweighted,
                    type,            scope,            std::move(parameters), filters};
}

template <Backbone (*F)(const WeightedGraph&)>
ScoringFunction plain() {
  return [](const WeightedGraph& g, const MethodParams&) { return F(g); };
}

template <Backbone (*F)(const WeightedGraph&, const MethodParams&)>
ScoringFunction with_params() {
  return [](const WeightedGraph& g, const MethodParams& p) { return F(g, p); };
}

}  // namespace

Registry Registry::with_builtins() {
  using enum Category;
  const Target E = Target::Edges, N = Target::Nodes;
  const Scope L = Scope::Local, G = Scope::Global;
  Registry r;

  r.register_method(info("disparity", "Disparity", Statistical, false, E, L, {"alpha"}, kScored), plain<disparity>());
  r.register_method(info("noise_corrected", "Noise Corrected", Statistical, false, E, L, {"alpha"}, kScored),
                    with_params<noise_corrected>());
  r.register_method(info("marginal_likelihood", "Marginal Likelihood", Statistical, false, E, L, {"alpha"}, kScored),
                    with_params<marginal_likelihood>());
  r.register_method(info("ecm", "Enhanced Configuration Model", Statistical, false, E, L, {"alpha"}, kScored),
                    with_params<ecm>());
  r.register_method(
      info("lans", "Locally Adaptive Network Sparsification", Statistical, false, E, L, {"alpha"}, kScored),
      plain<lans>());
  r.register_method(info("mla", "Multiple Linkage Analysis", Statistical, false, E, L, {}, kBooleanOnly), plain<mla>());

  r.register_method(info("global_threshold", "Global threshold", Structural, false, E, G, {"threshold"}, kScored),
                    plain<global_threshold>());
  r.register_method(info("maximum_spanning_tree", "Maximum Spanning Tree", Structural, false, E, G, {}, kBooleanOnly),
                    plain<maximum_spanning_tree>());
  r.register_method(info("doubly_stochastic", "Doubly Stochastic", Structural, false, E, L, {"threshold"}, kAll),
                    with_params<doubly_stochastic>());
  r.register_method(
      info("high_salience_skeleton", "High Salience Skeleton", Structural, false, E, G, {"threshold"}, kAll),
      with_params<high_salience_skeleton>());
  r.register_method(info("h_backbone", "h-Backbone", Structural, false, E, G, {}, kBooleanOnly), plain<h_backbone>());
  r.register_method(info("metric_backbone", "Metric Distance Backbone", Structural, false, E, G, {}, kBooleanOnly),
                    plain<metric_backbone>());
  r.register_method(
      info("ultrametric_backbone", "Ultrametric Distance Backbone", Structural, false, E, G, {}, kBooleanOnly),
      plain<ultrametric_backbone>());
  r.register_method(info("pmfg", "Planar Maximally Filtered Graph", Structural, false, E, G, {}, kBooleanOnly),
                    plain<pmfg>());
  r.register_method(
      info("modularity_backbone", "Modularity Backbone", Structural, false, N, G, {"threshold"}, kScored),
      with_params<modularity_vitality>());
  r.register_method(info("primary_linkage", "Primary Linkage Analysis", Structural, false, E, L, {}, kBooleanOnly),
                    plain<primary_linkage>());
  r.register_method(
      info("global_sparsification", "Global Sparsification", Structural, true, E, L, {"threshold"}, kScored),
      plain<global_sparsification>());
  r.register_method(info("edge_betweenness", "Edge Betweenness", Structural, true, E, G, {"threshold"}, kScored),
                    plain<betweenness_scores>());
  r.register_method(info("node_degree", "Node Degree", Structural, true, N, G, {"threshold"}, kScored),
                    plain<degree_scores>());

  r.register_method(info("glab", "Globally and Locally Adaptive Backbone", Hybrid, true, E, Scope::LocalAndGlobal,
                         {"c", "alpha"}, kScored),
                    [](const WeightedGraph& g, const MethodParams& p) { return glab(g, p); });

  r.register_measure("node_fraction", node_fraction);
  r.register_measure("edge_fraction", edge_fraction);
  r.register_measure("weight_fraction", weight_fraction);
  r.register_measure("density", [](const WeightedGraph&, const WeightedGraph& b) { return density(b); });
  r.register_measure("average_degree", [](const WeightedGraph&, const WeightedGraph& b) { return average_degree(b); });
  r.register_measure("reachability", [](const WeightedGraph&, const WeightedGraph& b) { return reachability(b); });
  return r;
}

const Registry& Registry::builtin() {
  static const Registry instance = with_builtins();
  return instance;
}

void Registry::register_method(MethodInfo info, ScoringFunction score) {
  if (info.name.empty()) throw UsageError("method name must not be empty");
  if (!score) throw UsageError("method '" + info.name + "' has no scoring function");
  if (info.filters.empty()) throw UsageError("method '" + info.name + "' accepts no filter");
  if (method_index_.contains(info.name)) throw UsageError("method '" + info.name + "' is already registered");
  method_index_.emplace(info.name, methods_.size());
  methods_.push_back({std::move(info), std::move(score)});
}

void Registry::register_measure(std::string name, MeasureFunction compute) {
  if (name.empty()) throw UsageError("measure name must not be empty");
  if (!compute) throw UsageError("measure '" + name + "' has no function");
  if (measure_index_.contains(name)) throw UsageError("measure '" + name + "' is already registered");
  measure_index_.emplace(name, measures_.size());
  measures_.push_back({std::move(name), std::move(compute)});
}

bool Registry::has_method(std::string_view name) const { return method_index_.find(name) != method_index_.end(); }
bool Registry::has_measure(std::string_view name) const { return measure_index_.find(name) != measure_index_.end(); }

const MethodEntry& Registry::method(std::string_view name) const {
  auto it = method_index_.find(name);
  if (it == method_index_.end()) {
    throw UsageError("unknown method '" + std::string(name) + "'; known methods: " + joined(method_names()));
  }
  return methods_[it->second];
}

const MeasureEntry& Registry::measure(std::string_view name) const {
  auto it = measure_index_.find(name);
  if (it == measure_index_.end()) {
    throw UsageError("unknown measure '" + std::string(name) + "'; known measures: " + joined(measure_names()));
  }
  return measures_[it->second];
}

std::vector<std::string> Registry::method_names() const {
  std::vector<std::string> out;
  for (const auto& m : methods_) out.push_back(m.info.name);
  return out;
}

std::vector<std::string> Registry::measure_names() const {
  std::vector<std::string> out;
  for (const auto& m : measures_) out.push_back(m.name);
  return out;
}

Backbone Registry::run(std::string_view name, const WeightedGraph& g, const MethodParams& params) const {
  const MethodEntry& entry = method(name);
  Backbone b = entry.score(g, params);
  if (!(b.source() == g)) throw MethodError("method '" + entry.info.name + "' scored a different graph");
  if (b.target() != entry.info.filter_type) {
    throw MethodError("method '" + entry.info.name + "' returned " + std::string(to_string(b.target())) +
                      " values but is registered for " + std::string(to_string(entry.info.filter_type)));
  }
  if (b.compatible_filters() != entry.info.filters) {
    throw MethodError("method '" + entry.info.name + "' returned filters that differ from its registration");
  }
  b.validate();
  b.rename(entry.info.name);
  return b;
}

}  // namespace bb
