#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bb {

using NodeIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// Unordered node pair in canonical order (u < v by byte comparison).
struct EdgeKey {
  std::string u;
  std::string v;

  static EdgeKey make(std::string a, std::string b);

  auto operator<=>(const EdgeKey&) const = default;
};

/// Endpoints are node indices with u < v; since node indices follow label
/// order, edge index order is canonical EdgeKey order.
struct Edge {
  NodeIndex u;
  NodeIndex v;
  double weight;
};

struct Neighbor {
  NodeIndex node;
  EdgeIndex edge;
};

/// Immutable simple undirected graph with strictly positive finite weights.
///
/// Nodes are numbered in lexicographic label order and edges in canonical key
/// order, so every traversal that walks indices in ascending order is
/// deterministic across platforms. Copies share the underlying storage.
class WeightedGraph {
 public:
  WeightedGraph();

  std::size_t node_count() const noexcept;
  std::size_t edge_count() const noexcept;
  bool empty() const noexcept { return node_count() == 0; }

  const std::string& label(NodeIndex v) const;
  std::span<const std::string> labels() const noexcept;
  std::optional<NodeIndex> find(std::string_view label) const;
  /// Throws UsageError for labels not in the graph.
  NodeIndex index_of(std::string_view label) const;

  std::span<const Edge> edges() const noexcept;
  const Edge& edge(EdgeIndex e) const;
  EdgeKey key(EdgeIndex e) const;
  std::optional<EdgeIndex> find_edge(NodeIndex a, NodeIndex b) const;
  std::optional<EdgeIndex> find_edge(std::string_view a, std::string_view b) const;

  /// Neighbors sorted by node index.
  std::span<const Neighbor> neighbors(NodeIndex v) const;
  std::size_t degree(NodeIndex v) const { return neighbors(v).size(); }
  double strength(NodeIndex v) const;
  double total_weight() const noexcept;

  /// Same labels, same edge set, bit-equal weights.
  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

 private:
  struct Storage;
  explicit WeightedGraph(std::shared_ptr<const Storage> storage);

  std::shared_ptr<const Storage> storage_;

  friend class GraphBuilder;
};

enum class DuplicatePolicy { Error, Sum };

/// Accumulates labelled edges and produces a WeightedGraph.
///
/// Self-loops are dropped and counted. A repeated pair is a DataError unless
/// the policy is Sum, in which case the weights are added.
class GraphBuilder {
 public:
  explicit GraphBuilder(DuplicatePolicy duplicates = DuplicatePolicy::Error);

  void add_node(std::string_view label);
  /// Returns false when the edge was a dropped self-loop.
  bool add_edge(std::string_view a, std::string_view b, double weight);

  std::size_t self_loops_dropped() const noexcept { return self_loops_; }

  WeightedGraph build() const;

 private:
  DuplicatePolicy duplicates_;
  std::size_t self_loops_ = 0;
  std::map<std::string, bool, std::less<>> nodes_;
  std::map<std::pair<std::string, std::string>, double> edges_;
};

std::size_t degree(const WeightedGraph& g, std::string_view node);
double strength(const WeightedGraph& g, std::string_view node);
double total_weight(const WeightedGraph& g);

/// Edge distances d = 1/w, indexed by EdgeIndex. Shared by every
/// shortest-path based method.
std::vector<double> distance_view(const WeightedGraph& g);

/// Edge-induced subgraph: the listed edges plus their endpoints.
WeightedGraph edge_subgraph(const WeightedGraph& g, std::span<const EdgeIndex> edges);
/// Node-induced subgraph: the listed nodes (isolated ones included) and every
/// edge of g between two of them.
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const NodeIndex> nodes);

/// Connected component id per node, numbered by smallest member index.
std::vector<std::size_t> connected_components(const WeightedGraph& g, std::size_t* count = nullptr);

}  // namespace bb
