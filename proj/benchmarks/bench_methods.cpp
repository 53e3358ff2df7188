#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>
#include <string>

#include "backbone/compare.hpp"
#include "backbone/edge_list.hpp"
#include "backbone/metrics.hpp"
#include "backbone/statistical.hpp"
#include "backbone/structural.hpp"

namespace {

using bb::WeightedGraph;

// Erdos-Renyi graph with integer weights in [1, 50], labelled v0, v1, ...
WeightedGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(p);
  std::uniform_int_distribution<int> weight(1, 50);
  bb::GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (keep(rng)) b.add_edge("v" + std::to_string(i), "v" + std::to_string(j), weight(rng));
    }
  }
  return b.build();
}

const WeightedGraph& les_miserables() {
  static const WeightedGraph g =
      bb::load_edge_list(std::filesystem::path(BACKBONE_DATA_DIR) / "les_miserables.csv").graph;
  return g;
}

template <auto Method>
void BM_LesMiserables(benchmark::State& state) {
  const WeightedGraph& g = les_miserables();
  for (auto _ : state) benchmark::DoNotOptimize(Method(g));
}

template <auto Method>
void BM_Random(benchmark::State& state) {
  const WeightedGraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(Method(g));
  state.counters["edges"] = static_cast<double>(g.edge_count());
}

bb::Backbone disparity(const WeightedGraph& g) { return bb::disparity(g); }
bb::Backbone ecm(const WeightedGraph& g) { return bb::ecm(g); }
bb::Backbone hss(const WeightedGraph& g) { return bb::high_salience_skeleton(g); }
bb::Backbone betweenness(const WeightedGraph& g) { return bb::betweenness_scores(g); }
bb::Backbone pmfg(const WeightedGraph& g) { return bb::pmfg(g); }
bb::Backbone metric(const WeightedGraph& g) { return bb::metric_backbone(g); }
bb::Backbone mst(const WeightedGraph& g) { return bb::maximum_spanning_tree(g); }

void BM_KsStatistic(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  std::vector<double> a(static_cast<std::size_t>(state.range(0))), b(a.size());
  for (double& x : a) x = normal(rng);
  for (double& x : b) x = normal(rng) + 0.1;
  for (auto _ : state) benchmark::DoNotOptimize(bb::ks_statistic(a, b));
}

}  // namespace

BENCHMARK(BM_LesMiserables<disparity>)->Name("les_miserables/disparity");
BENCHMARK(BM_LesMiserables<ecm>)->Name("les_miserables/ecm");
BENCHMARK(BM_LesMiserables<hss>)->Name("les_miserables/high_salience_skeleton");
BENCHMARK(BM_LesMiserables<betweenness>)->Name("les_miserables/edge_betweenness");
BENCHMARK(BM_LesMiserables<pmfg>)->Name("les_miserables/pmfg");
BENCHMARK(BM_Random<hss>)->Name("random/high_salience_skeleton")->Arg(100)->Arg(200)->Arg(400);
BENCHMARK(BM_Random<betweenness>)->Name("random/edge_betweenness")->Arg(100)->Arg(200)->Arg(400);
BENCHMARK(BM_Random<metric>)->Name("random/metric_backbone")->Arg(100)->Arg(200)->Arg(400);
BENCHMARK(BM_Random<mst>)->Name("random/maximum_spanning_tree")->Arg(400)->Arg(1600);
BENCHMARK(BM_Random<pmfg>)->Name("random/pmfg")->Arg(50)->Arg(100)->Arg(200);
BENCHMARK(BM_Random<ecm>)->Name("random/ecm")->Arg(100)->Arg(200);
BENCHMARK(BM_KsStatistic)->Arg(1000)->Arg(100000);

BENCHMARK_MAIN();
