#include "backbone/planarity.hpp"

#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace bb {

bool is_planar(std::size_t node_count, std::span<const NodePair> edges) {
  // Euler bound: a simple planar graph with n >= 3 has at most 3n - 6 edges.
  if (node_count >= 3 && edges.size() > 3 * node_count - 6) return false;
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph graph(node_count);
  for (const auto& [u, v] : edges) boost::add_edge(u, v, graph);
  return boost::boyer_myrvold_planarity_test(graph);
}

bool is_planar(const WeightedGraph& g) {
  std::vector<NodePair> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  return is_planar(g.node_count(), pairs);
}

}  // namespace bb
