#include "backbone/hybrid.hpp"

#include <algorithm>
#include <cmath>

#include "backbone/error.hpp"
#include "backbone/parallel.hpp"
#include "backbone/shortest_paths.hpp"

namespace bb {

Involvement edge_involvement(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  const auto length = distance_view(g);
  Involvement inv{std::vector<double>(g.edge_count(), 0.0), std::vector<double>(g.edge_count(), 0.0)};
  // Each source writes only the entries of its own incident edges, so the
  // blocks never touch the same slot.
  parallel_blocks(n, 16, [&](std::size_t, std::size_t begin, std::size_t end) {
    ShortestPathDag dag;
    std::vector<double> paths_from(n);
    for (std::size_t si = begin; si < end; ++si) {
      const auto s = static_cast<NodeIndex>(si);
      shortest_path_dag(g, length, s, dag);
      // paths_from[v]: shortest-path DAG paths that start at v (the one-node
      // path included), i.e. sum over targets t of paths v -> t.
      std::fill(paths_from.begin(), paths_from.end(), 0.0);
      for (NodeIndex v : dag.order) paths_from[v] = 1.0;
      for (auto it = dag.order.rbegin(); it != dag.order.rend(); ++it)
        for (const Neighbor& p : dag.preds[*it]) paths_from[p.node] += paths_from[*it];
      // Paths through DAG edge (a, b) number sigma_a * paths_from[b]; sigma_s = 1.
      double total = 0.0;
      for (NodeIndex t : dag.order)
        if (t != s) total += dag.sigma[t];
      for (const Neighbor& nb : g.neighbors(s)) {
        double through = 0.0;
        for (const Neighbor& p : dag.preds[nb.node])
          if (p.node == s && p.edge == nb.edge) through = paths_from[nb.node];
        const double value = total > 0.0 ? through / total : 0.0;
        if (g.edge(nb.edge).u == s) {
          inv.from_u[nb.edge] = value;
        } else {
          inv.from_v[nb.edge] = value;
        }
      }
    }
  });
  return inv;
}

NullModel parse_null_model(std::string_view name) {
  if (name == "uniform") return NullModel::Uniform;
  throw UsageError("unknown null model '" + std::string(name) + "' (only 'uniform' is available)");
}

double glab_endpoint_p_value(double involvement, double c, std::size_t degree) {
  const double k = static_cast<double>(degree);
  const double exponent = std::max(1.0, c * (k - 1.0));
  return std::clamp(std::pow(1.0 - std::clamp(involvement, 0.0, 1.0), exponent), 0.0, 1.0);
}

Backbone glab(const WeightedGraph& g, const MethodParams& params, NullModel null_model) {
  const double c = params.get("c", 1.0);
  if (!(c >= 0.0) || !std::isfinite(c)) throw UsageError("glab: c must be a finite value >= 0");
  if (null_model != NullModel::Uniform) throw UsageError("glab: unsupported null model");
  const Involvement inv = edge_involvement(g);
  std::vector<double> p(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    p[e] = std::min(glab_endpoint_p_value(inv.from_u[e], c, g.degree(ed.u)),
                    glab_endpoint_p_value(inv.from_v[e], c, g.degree(ed.v)));
  }
  return Backbone(g, "glab", Target::Edges, "p_value", Direction::LowerIsStronger, std::move(p),
                  FilterSet{FilterKind::Threshold, FilterKind::Fraction});
}

}  // namespace bb
