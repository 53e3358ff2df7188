#include "backbone/shortest_paths.hpp"

#include <cmath>
#include <functional>
#include <queue>
#include <utility>

namespace bb {
namespace {
using QueueItem = std::pair<double, NodeIndex>;
using MinQueue = std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>>;
}  // namespace

void shortest_path_dag(const WeightedGraph& g, std::span<const double> length, NodeIndex source,
                       ShortestPathDag& out) {
  const std::size_t n = g.node_count();
  out.dist.assign(n, kInfinity);
  out.sigma.assign(n, 0.0);
  out.order.clear();
  out.preds.resize(n);
  for (auto& p : out.preds) p.clear();

  std::vector<char> settled(n, 0);
  MinQueue queue;
  out.dist[source] = 0.0;
  out.sigma[source] = 1.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[v] || d > out.dist[v]) continue;
    settled[v] = 1;
    out.order.push_back(v);
    for (const Neighbor& nb : g.neighbors(v)) {
      const NodeIndex w = nb.node;
      if (settled[w]) continue;
      const double candidate = d + length[nb.edge];
      if (out.dist[w] == kInfinity || (candidate < out.dist[w] && !same_length(candidate, out.dist[w]))) {
        out.dist[w] = candidate;
        out.sigma[w] = out.sigma[v];
        out.preds[w].assign(1, Neighbor{v, nb.edge});
        queue.emplace(candidate, w);
      } else if (same_length(candidate, out.dist[w])) {
        out.sigma[w] += out.sigma[v];
        out.preds[w].push_back(Neighbor{v, nb.edge});
      }
    }
  }
}

std::vector<double> bottleneck_distances(const WeightedGraph& g, std::span<const double> length, NodeIndex source) {
  const std::size_t n = g.node_count();
  std::vector<double> best(n, kInfinity);
  std::vector<char> settled(n, 0);
  MinQueue queue;
  best[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    for (const Neighbor& nb : g.neighbors(v)) {
      const double candidate = std::max(d, length[nb.edge]);
      if (candidate < best[nb.node]) {
        best[nb.node] = candidate;
        queue.emplace(candidate, nb.node);
      }
    }
  }
  return best;
}

}  // namespace bb
