#include "backbone/structural.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "backbone/error.hpp"
#include "backbone/louvain.hpp"
#include "backbone/parallel.hpp"
#include "backbone/planarity.hpp"
#include "backbone/shortest_paths.hpp"

namespace bb {
namespace {

constexpr FilterSet kBooleanOnly{FilterKind::Boolean};
constexpr FilterSet kScoreFilters{FilterKind::Threshold, FilterKind::Fraction};
constexpr std::size_t kSourceBlock = 16;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

// Edge indices by descending key, canonical order on ties.
std::vector<EdgeIndex> descending(const std::vector<double>& key) {
  std::vector<EdgeIndex> order(key.size());
  std::iota(order.begin(), order.end(), EdgeIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) { return key[a] > key[b]; });
  return order;
}

std::vector<double> weights_of(const WeightedGraph& g) {
  std::vector<double> w;
  w.reserve(g.edge_count());
  for (const Edge& e : g.edges()) w.push_back(e.weight);
  return w;
}

Backbone boolean_backbone(const WeightedGraph& g, std::string name, std::vector<double> keep) {
  return Backbone(g, std::move(name), Target::Edges, std::string(kBooleanValue), Direction::HigherIsStronger,
                  std::move(keep), kBooleanOnly);
}

// Sums per-block partial vectors in block order, so the result does not
// depend on how blocks were scheduled.
template <typename Fn>
std::vector<double> per_source_sum(const WeightedGraph& g, std::size_t width, Fn&& per_source) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> partial(block_count(n, kSourceBlock));
  parallel_blocks(n, kSourceBlock, [&](std::size_t b, std::size_t begin, std::size_t end) {
    std::vector<double> acc(width, 0.0);
    ShortestPathDag dag;
    for (std::size_t s = begin; s < end; ++s) per_source(static_cast<NodeIndex>(s), dag, acc);
    partial[b] = std::move(acc);
  });
  std::vector<double> total(width, 0.0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < width; ++i) total[i] += p[i];
  return total;
}

}  // namespace

Backbone global_threshold(const WeightedGraph& g) {
  return Backbone(g, "global_threshold", Target::Edges, "score", Direction::HigherIsStronger, weights_of(g),
                  kScoreFilters);
}

Backbone maximum_spanning_tree(const WeightedGraph& g) {
  DisjointSets sets(g.node_count());
  std::vector<double> keep(g.edge_count(), 0.0);
  for (EdgeIndex e : descending(weights_of(g))) {
    if (sets.unite(g.edge(e).u, g.edge(e).v)) keep[e] = 1.0;
  }
  return boolean_backbone(g, "maximum_spanning_tree", std::move(keep));
}

SinkhornResult sinkhorn(const WeightedGraph& g, const SinkhornOptions& options) {
  // Scaling is applied to the matrix entries, which stay in [0, 1].
  // Edge e = (u, v) carries fwd[e] = P_uv and bwd[e] = P_vu.
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  std::vector<double> fwd(m), bwd(m);
  for (EdgeIndex e = 0; e < m; ++e) fwd[e] = bwd[e] = g.edge(e).weight;
  auto row_entry = [&](EdgeIndex e, NodeIndex i) -> double& { return g.edge(e).u == i ? fwd[e] : bwd[e]; };
  auto col_entry = [&](EdgeIndex e, NodeIndex j) -> double& { return g.edge(e).v == j ? fwd[e] : bwd[e]; };
  auto row_residual = [&] {
    double worst = 0.0;
    for (NodeIndex i = 0; i < n; ++i) {
      if (g.degree(i) == 0) continue;
      double sum = 0.0;
      for (const Neighbor& nb : g.neighbors(i)) sum += row_entry(nb.edge, i);
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
  };

  SinkhornResult result;
  result.residual = m == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  result.converged = m == 0;
  for (std::size_t it = 0; it < options.max_iter && !result.converged; ++it) {
    for (NodeIndex i = 0; i < n; ++i) {
      double sum = 0.0;
      for (const Neighbor& nb : g.neighbors(i)) sum += row_entry(nb.edge, i);
      if (sum > 0.0)
        for (const Neighbor& nb : g.neighbors(i)) row_entry(nb.edge, i) /= sum;
    }
    for (NodeIndex j = 0; j < n; ++j) {
      double sum = 0.0;
      for (const Neighbor& nb : g.neighbors(j)) sum += col_entry(nb.edge, j);
      if (sum > 0.0)
        for (const Neighbor& nb : g.neighbors(j)) col_entry(nb.edge, j) /= sum;
    }
    result.iterations = it + 1;
    // Columns are exact after the column step; rows carry the error.
    result.residual = row_residual();
    result.converged = result.residual <= options.tol;
  }
  result.normalized.resize(m);
  for (EdgeIndex e = 0; e < m; ++e) result.normalized[e] = 0.5 * (fwd[e] + bwd[e]);
  return result;
}

std::vector<std::uint8_t> spanning_prefix(const WeightedGraph& g, const std::vector<double>& scores,
                                          bool* multi_component) {
  std::size_t components = 0;
  const auto comp = connected_components(g, &components);
  std::size_t target_nodes = 0;
  std::vector<char> component_has_edge(components, 0);
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) > 0) {
      ++target_nodes;
      component_has_edge[comp[v]] = 1;
    }
  }
  const std::size_t target_components =
      static_cast<std::size_t>(std::count(component_has_edge.begin(), component_has_edge.end(), 1));
  if (multi_component) *multi_component = target_components > 1;

  std::vector<std::uint8_t> keep(g.edge_count(), 0);
  DisjointSets sets(g.node_count());
  std::vector<char> covered(g.node_count(), 0);
  std::size_t covered_count = 0, merges = 0;
  for (EdgeIndex e : descending(scores)) {
    if (covered_count == target_nodes && covered_count - merges == target_components) break;
    keep[e] = 1;
    for (NodeIndex v : {g.edge(e).u, g.edge(e).v}) {
      if (!covered[v]) {
        covered[v] = 1;
        ++covered_count;
      }
    }
    if (sets.unite(g.edge(e).u, g.edge(e).v)) ++merges;
  }
  return keep;
}

Backbone doubly_stochastic(const WeightedGraph& g, const MethodParams& params) {
  SinkhornOptions options;
  options.tol = params.get("tol", options.tol);
  options.max_iter = static_cast<std::size_t>(params.get("max_iter", static_cast<double>(options.max_iter)));
  if (!(options.tol > 0.0)) throw UsageError("doubly_stochastic: tol must be positive");
  const bool allow_unconverged = params.get("allow_unconverged", 0.0) != 0.0;

  SinkhornResult s = sinkhorn(g, options);
  std::string warning;
  if (!s.converged) {
    std::ostringstream msg;
    msg << "doubly_stochastic: Sinkhorn normalization did not converge after " << s.iterations
        << " iterations (residual " << s.residual << ", tol " << options.tol << ")";
    if (!allow_unconverged) throw MethodError(msg.str());
    warning = msg.str();
  }
  bool multi = false;
  auto prefix = spanning_prefix(g, s.normalized, &multi);
  Backbone b(g, "doubly_stochastic", Target::Edges, "normalized_weight", Direction::HigherIsStronger,
             std::move(s.normalized), FilterSet{FilterKind::Boolean, FilterKind::Threshold, FilterKind::Fraction});
  b.set_boolean_view(std::move(prefix));
  if (!warning.empty()) b.add_warning(warning);
  if (multi) b.add_warning("doubly_stochastic: input is disconnected; boolean view spans each component separately");
  return b;
}

std::vector<double> edge_salience(const WeightedGraph& g) {
  const auto length = distance_view(g);
  const std::size_t m = g.edge_count();
  std::vector<double> counts = per_source_sum(g, m, [&](NodeIndex s, ShortestPathDag& dag, std::vector<double>& acc) {
    shortest_path_dag(g, length, s, dag);
    std::vector<char> on_dag(m, 0);
    for (NodeIndex v : dag.order)
      for (const Neighbor& p : dag.preds[v]) on_dag[p.edge] = 1;
    for (std::size_t e = 0; e < m; ++e) acc[e] += on_dag[e];
  });
  const double n = static_cast<double>(g.node_count());
  for (double& c : counts) c /= n;
  return counts;
}

Backbone high_salience_skeleton(const WeightedGraph& g, const MethodParams& params) {
  const double cutoff = params.get("cutoff", 0.8);
  std::vector<double> salience = edge_salience(g);
  std::vector<std::uint8_t> mask(salience.size());
  for (std::size_t e = 0; e < salience.size(); ++e) mask[e] = salience[e] >= cutoff ? 1 : 0;
  Backbone b(g, "high_salience_skeleton", Target::Edges, "salience", Direction::HigherIsStronger, std::move(salience),
             FilterSet{FilterKind::Boolean, FilterKind::Threshold, FilterKind::Fraction});
  b.set_boolean_view(std::move(mask));
  return b;
}

std::vector<double> edge_betweenness(const WeightedGraph& g) {
  const auto length = distance_view(g);
  const std::size_t n = g.node_count();
  std::vector<double> bc =
      per_source_sum(g, g.edge_count(), [&](NodeIndex s, ShortestPathDag& dag, std::vector<double>& acc) {
        shortest_path_dag(g, length, s, dag);
        std::vector<double> delta(n, 0.0);
        for (auto it = dag.order.rbegin(); it != dag.order.rend(); ++it) {
          const NodeIndex w = *it;
          for (const Neighbor& p : dag.preds[w]) {
            const double c = dag.sigma[p.node] / dag.sigma[w] * (1.0 + delta[w]);
            acc[p.edge] += c;
            delta[p.node] += c;
          }
        }
      });
  for (double& x : bc) x *= 0.5;  // each unordered pair was seen from both ends
  return bc;
}

std::size_t h_index(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::size_t h = 0;
  while (h < values.size() && values[h] >= static_cast<double>(h + 1)) ++h;
  return h;
}

Backbone h_backbone(const WeightedGraph& g) {
  const std::vector<double> w = weights_of(g);
  std::vector<double> bridge = edge_betweenness(g);
  const double n = static_cast<double>(g.node_count());
  for (double& b : bridge) b /= n;
  const std::size_t h_strength = h_index(w);
  const std::size_t h_bridge = h_index(bridge);
  std::vector<double> keep(g.edge_count(), 0.0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const bool strong = h_strength > 0 && w[e] >= static_cast<double>(h_strength);
    const bool bridging = h_bridge > 0 && bridge[e] >= static_cast<double>(h_bridge);
    keep[e] = strong || bridging ? 1.0 : 0.0;
  }
  return boolean_backbone(g, "h_backbone", std::move(keep));
}

Backbone metric_backbone(const WeightedGraph& g) {
  const auto length = distance_view(g);
  const std::size_t m = g.edge_count();
  std::vector<double> keep = per_source_sum(g, m, [&](NodeIndex s, ShortestPathDag& dag, std::vector<double>& acc) {
    shortest_path_dag(g, length, s, dag);
    for (const Neighbor& nb : g.neighbors(s)) {
      if (nb.node < s) continue;  // decide each edge once, from its smaller endpoint
      if (same_length(length[nb.edge], dag.dist[nb.node])) acc[nb.edge] = 1.0;
    }
  });
  return boolean_backbone(g, "metric_backbone", std::move(keep));
}

Backbone ultrametric_backbone(const WeightedGraph& g) {
  const auto length = distance_view(g);
  const std::size_t m = g.edge_count();
  std::vector<double> keep = per_source_sum(g, m, [&](NodeIndex s, ShortestPathDag&, std::vector<double>& acc) {
    const auto best = bottleneck_distances(g, length, s);
    for (const Neighbor& nb : g.neighbors(s)) {
      if (nb.node < s) continue;
      if (length[nb.edge] <= best[nb.node]) acc[nb.edge] = 1.0;
    }
  });
  return boolean_backbone(g, "ultrametric_backbone", std::move(keep));
}

Backbone pmfg(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  const std::size_t limit = n >= 3 ? 3 * (n - 2) : g.edge_count();
  std::vector<double> keep(g.edge_count(), 0.0);
  std::vector<NodePair> kept;
  DisjointSets sets(n);
  for (EdgeIndex e : descending(weights_of(g))) {
    if (kept.size() >= limit) break;
    const Edge& ed = g.edge(e);
    // Joining two components cannot create a Kuratowski subgraph.
    bool accept = sets.find(ed.u) != sets.find(ed.v);
    if (!accept) {
      kept.emplace_back(ed.u, ed.v);
      accept = is_planar(n, kept);
      kept.pop_back();
    }
    if (accept) {
      kept.emplace_back(ed.u, ed.v);
      sets.unite(ed.u, ed.v);
      keep[e] = 1.0;
    }
  }
  return boolean_backbone(g, "pmfg", std::move(keep));
}

Backbone modularity_vitality(const WeightedGraph& g, const MethodParams& params) {
  const auto seed = params.seed;
  const bool shuffle = params.get("shuffle", 0.0) != 0.0;
  const std::size_t n = g.node_count();
  const double q_full = louvain(g, seed, shuffle).modularity;
  std::vector<double> vitality(n, 0.0);
  parallel_blocks(n, 4, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<NodeIndex> rest;
    for (std::size_t v = begin; v < end; ++v) {
      rest.clear();
      for (NodeIndex u = 0; u < n; ++u)
        if (u != v) rest.push_back(u);
      const WeightedGraph without = induced_subgraph(g, rest);
      vitality[v] = q_full - louvain(without, seed, shuffle).modularity;
    }
  });
  return Backbone(g, "modularity_backbone", Target::Nodes, "vitality", Direction::HigherIsStronger,
                  std::move(vitality), kScoreFilters);
}

Backbone primary_linkage(const WeightedGraph& g) {
  std::vector<double> keep(g.edge_count(), 0.0);
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const auto nb = g.neighbors(v);
    if (nb.empty()) continue;
    EdgeIndex best = nb.front().edge;
    for (const Neighbor& x : nb) {
      const double w = g.edge(x.edge).weight, wb = g.edge(best).weight;
      if (w > wb || (w == wb && x.edge < best)) best = x.edge;
    }
    keep[best] = 1.0;
  }
  return boolean_backbone(g, "primary_linkage", std::move(keep));
}

Backbone global_sparsification(const WeightedGraph& g) {
  std::vector<double> score(g.edge_count(), 0.0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto a = g.neighbors(g.edge(e).u);
    const auto b = g.neighbors(g.edge(e).v);
    std::size_t common = 0;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i].node < b[j].node) {
        ++i;
      } else if (b[j].node < a[i].node) {
        ++j;
      } else {
        ++common;
        ++i;
        ++j;
      }
    }
    const std::size_t uni = a.size() + b.size() - common;
    score[e] = uni == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(uni);
  }
  return Backbone(g, "global_sparsification", Target::Edges, "jaccard", Direction::HigherIsStronger, std::move(score),
                  kScoreFilters);
}

Backbone degree_scores(const WeightedGraph& g) {
  std::vector<double> deg(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) deg[v] = static_cast<double>(g.degree(v));
  return Backbone(g, "node_degree", Target::Nodes, "degree", Direction::HigherIsStronger, std::move(deg),
                  kScoreFilters);
}

Backbone betweenness_scores(const WeightedGraph& g) {
  return Backbone(g, "edge_betweenness", Target::Edges, "betweenness", Direction::HigherIsStronger,
                  edge_betweenness(g), kScoreFilters);
}

}  // namespace bb
