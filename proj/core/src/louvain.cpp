#include "backbone/louvain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace bb {
namespace {

struct Level {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;  // no self entries
  std::vector<double> loop;                                      // ordered-pair internal weight
  std::vector<double> degree;                                    // weighted degree incl. loop
};

Level from_graph(const WeightedGraph& g) {
  Level l;
  const std::size_t n = g.node_count();
  l.adj.resize(n);
  l.loop.assign(n, 0.0);
  l.degree.assign(n, 0.0);
  for (NodeIndex v = 0; v < n; ++v) {
    for (const Neighbor& nb : g.neighbors(v)) {
      const double w = g.edge(nb.edge).weight;
      l.adj[v].emplace_back(nb.node, w);
      l.degree[v] += w;
    }
  }
  return l;
}

// One round of local moving. Returns true if any node changed community.
bool local_moving(const Level& l, double two_w, std::vector<std::size_t>& comm, const std::vector<std::size_t>& order) {
  const std::size_t n = l.adj.size();
  std::vector<double> tot(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) tot[comm[i]] += l.degree[i];

  std::vector<double> link(n, 0.0);
  std::vector<std::size_t> touched;
  bool any = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i : order) {
      const std::size_t own = comm[i];
      touched.clear();
      for (const auto& [j, w] : l.adj[i]) {
        if (link[comm[j]] == 0.0) touched.push_back(comm[j]);
        link[comm[j]] += w;
      }
      tot[own] -= l.degree[i];
      const double ki = l.degree[i];
      auto gain = [&](std::size_t c) { return link[c] - tot[c] * ki / two_w; };

      std::size_t best = own;
      double best_gain = gain(own);
      std::sort(touched.begin(), touched.end());
      for (std::size_t c : touched) {
        const double g = gain(c);
        if (g > best_gain + 1e-12 * std::max(1.0, std::abs(best_gain))) {
          best_gain = g;
          best = c;
        }
      }
      tot[best] += ki;
      if (best != own) {
        comm[i] = best;
        moved = true;
        any = true;
      }
      for (std::size_t c : touched) link[c] = 0.0;
      link[own] = 0.0;
    }
  }
  return any;
}

// Renumber communities 0..k-1 in order of first appearance by node index.
std::size_t renumber(std::vector<std::size_t>& comm) {
  std::vector<std::size_t> map(comm.size(), static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (auto& c : comm) {
    if (map[c] == static_cast<std::size_t>(-1)) map[c] = next++;
    c = map[c];
  }
  return next;
}

Level aggregate(const Level& l, const std::vector<std::size_t>& comm, std::size_t k) {
  Level out;
  out.adj.resize(k);
  out.loop.assign(k, 0.0);
  out.degree.assign(k, 0.0);
  std::vector<std::map<std::size_t, double>> acc(k);
  for (std::size_t i = 0; i < l.adj.size(); ++i) {
    const std::size_t ci = comm[i];
    out.loop[ci] += l.loop[i];
    out.degree[ci] += l.degree[i];
    for (const auto& [j, w] : l.adj[i]) {
      const std::size_t cj = comm[j];
      if (ci == cj) {
        out.loop[ci] += w;  // visited from both ends: ordered-pair count
      } else {
        acc[ci][cj] += w;
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c)
    for (const auto& [d, w] : acc[c]) out.adj[c].emplace_back(d, w);
  return out;
}

}  // namespace

double modularity(const WeightedGraph& g, const std::vector<std::size_t>& community) {
  const double two_w = 2.0 * g.total_weight();
  if (two_w == 0.0) return 0.0;
  const std::size_t k = community.empty() ? 0 : *std::max_element(community.begin(), community.end()) + 1;
  std::vector<double> in(k, 0.0), tot(k, 0.0);
  for (NodeIndex v = 0; v < g.node_count(); ++v) tot[community[v]] += g.strength(v);
  for (const Edge& e : g.edges())
    if (community[e.u] == community[e.v]) in[community[e.u]] += 2.0 * e.weight;
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) q += in[c] / two_w - (tot[c] / two_w) * (tot[c] / two_w);
  return q;
}

Partition louvain(const WeightedGraph& g, std::uint64_t seed, bool shuffle) {
  const std::size_t n = g.node_count();
  Partition result;
  result.community.resize(n);
  std::iota(result.community.begin(), result.community.end(), std::size_t{0});
  const double two_w = 2.0 * g.total_weight();
  if (n == 0 || two_w == 0.0) {
    renumber(result.community);
    result.modularity = 0.0;
    return result;
  }

  std::mt19937_64 rng(seed);
  Level level = from_graph(g);
  std::vector<std::size_t> membership(n);  // original node -> current level node
  std::iota(membership.begin(), membership.end(), std::size_t{0});

  while (true) {
    const std::size_t ln = level.adj.size();
    std::vector<std::size_t> comm(ln);
    std::iota(comm.begin(), comm.end(), std::size_t{0});
    std::vector<std::size_t> order(ln);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (shuffle) std::shuffle(order.begin(), order.end(), rng);

    if (!local_moving(level, two_w, comm, order)) break;
    const std::size_t k = renumber(comm);
    for (auto& m : membership) m = comm[m];
    if (k == ln) break;
    level = aggregate(level, comm, k);
  }

  result.community = membership;
  renumber(result.community);
  result.modularity = modularity(g, result.community);
  return result;
}

}  // namespace bb
