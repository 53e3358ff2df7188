#include "backbone/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "backbone/error.hpp"

namespace bb {

void require_subgraph(const WeightedGraph& original, const WeightedGraph& backbone) {
  for (const auto& label : backbone.labels()) {
    if (!original.find(label)) throw DataError("backbone node '" + label + "' is not in the original graph");
  }
  for (EdgeIndex e = 0; e < backbone.edge_count(); ++e) {
    const EdgeKey key = backbone.key(e);
    auto oe = original.find_edge(key.u, key.v);
    if (!oe || original.edge(*oe).weight != backbone.edge(e).weight) {
      throw DataError("backbone edge (" + key.u + ", " + key.v + ") is not an edge of the original graph");
    }
  }
}

namespace {
double ratio(double part, double whole) { return whole == 0.0 ? 0.0 : part / whole; }
}  // namespace

double node_fraction(const WeightedGraph& original, const WeightedGraph& backbone) {
  require_subgraph(original, backbone);
  return ratio(static_cast<double>(backbone.node_count()), static_cast<double>(original.node_count()));
}

double edge_fraction(const WeightedGraph& original, const WeightedGraph& backbone) {
  require_subgraph(original, backbone);
  return ratio(static_cast<double>(backbone.edge_count()), static_cast<double>(original.edge_count()));
}

double weight_fraction(const WeightedGraph& original, const WeightedGraph& backbone) {
  require_subgraph(original, backbone);
  return ratio(backbone.total_weight(), original.total_weight());
}

double density(const WeightedGraph& g) {
  const double n = static_cast<double>(g.node_count());
  if (g.node_count() < 2) throw DataError("density needs at least 2 nodes");
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

double average_degree(const WeightedGraph& g) {
  if (g.node_count() == 0) throw DataError("average degree of an empty graph");
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

double reachability(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw DataError("reachability needs at least 2 nodes");
  std::size_t count = 0;
  const auto comp = connected_components(g, &count);
  std::vector<double> size(count, 0.0);
  for (std::size_t c : comp) size[c] += 1.0;
  double pairs = 0.0;
  for (double s : size) pairs += s * (s - 1.0);
  const double nn = static_cast<double>(n);
  return pairs / (nn * (nn - 1.0));
}

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw UsageError("KS statistic needs two non-empty samples");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return d;
}

DistributionKind parse_distribution(std::string_view name) {
  if (name == "weights" || name == "weight") return DistributionKind::Weights;
  if (name == "degrees" || name == "degree") return DistributionKind::Degrees;
  throw UsageError("unknown distribution '" + std::string(name) + "' (expected weights or degrees)");
}

std::string_view to_string(DistributionKind kind) { return kind == DistributionKind::Weights ? "weights" : "degrees"; }

std::vector<double> distribution_sample(const WeightedGraph& g, DistributionKind kind) {
  std::vector<double> out;
  if (kind == DistributionKind::Weights) {
    for (const Edge& e : g.edges()) out.push_back(e.weight);
  } else {
    for (NodeIndex v = 0; v < g.node_count(); ++v) out.push_back(static_cast<double>(g.degree(v)));
  }
  return out;
}

}  // namespace bb
