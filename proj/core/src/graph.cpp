#include "backbone/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "backbone/error.hpp"

namespace bb {

struct WeightedGraph::Storage {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<std::size_t> offsets;  // CSR row starts, size n + 1
  std::vector<Neighbor> adjacency;
  std::vector<double> strengths;
  double total_weight = 0.0;
};

EdgeKey EdgeKey::make(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return EdgeKey{std::move(a), std::move(b)};
}

WeightedGraph::WeightedGraph() {
  auto s = std::make_shared<Storage>();
  s->offsets.push_back(0);
  storage_ = std::move(s);
}

WeightedGraph::WeightedGraph(std::shared_ptr<const Storage> storage) : storage_(std::move(storage)) {}

std::size_t WeightedGraph::node_count() const noexcept { return storage_->labels.size(); }
std::size_t WeightedGraph::edge_count() const noexcept { return storage_->edges.size(); }

const std::string& WeightedGraph::label(NodeIndex v) const { return storage_->labels.at(v); }

std::span<const std::string> WeightedGraph::labels() const noexcept { return storage_->labels; }

std::optional<NodeIndex> WeightedGraph::find(std::string_view label) const {
  const auto& labels = storage_->labels;
  auto it = std::lower_bound(labels.begin(), labels.end(), label,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == labels.end() || *it != label) return std::nullopt;
  return static_cast<NodeIndex>(it - labels.begin());
}

NodeIndex WeightedGraph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw UsageError("unknown node '" + std::string(label) + "'");
}

std::span<const Edge> WeightedGraph::edges() const noexcept { return storage_->edges; }

const Edge& WeightedGraph::edge(EdgeIndex e) const { return storage_->edges.at(e); }

EdgeKey WeightedGraph::key(EdgeIndex e) const {
  const Edge& ed = edge(e);
  return EdgeKey{label(ed.u), label(ed.v)};
}

std::span<const Neighbor> WeightedGraph::neighbors(NodeIndex v) const {
  const auto& s = *storage_;
  if (v >= s.labels.size()) throw UsageError("node index out of range");
  return std::span<const Neighbor>(s.adjacency).subspan(s.offsets[v], s.offsets[v + 1] - s.offsets[v]);
}

std::optional<EdgeIndex> WeightedGraph::find_edge(NodeIndex a, NodeIndex b) const {
  if (a >= node_count() || b >= node_count()) return std::nullopt;
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b,
                             [](const Neighbor& n, NodeIndex x) { return n.node < x; });
  if (it == nb.end() || it->node != b) return std::nullopt;
  return it->edge;
}

std::optional<EdgeIndex> WeightedGraph::find_edge(std::string_view a, std::string_view b) const {
  auto ia = find(a);
  auto ib = find(b);
  if (!ia || !ib) return std::nullopt;
  return find_edge(*ia, *ib);
}

double WeightedGraph::strength(NodeIndex v) const {
  if (v >= node_count()) throw UsageError("node index out of range");
  return storage_->strengths[v];
}

double WeightedGraph::total_weight() const noexcept { return storage_->total_weight; }

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.storage_ == b.storage_) return true;
  if (a.storage_->labels != b.storage_->labels) return false;
  const auto& ea = a.storage_->edges;
  const auto& eb = b.storage_->edges;
  return std::equal(ea.begin(), ea.end(), eb.begin(), eb.end(), [](const Edge& x, const Edge& y) {
    return x.u == y.u && x.v == y.v && x.weight == y.weight;
  });
}

GraphBuilder::GraphBuilder(DuplicatePolicy duplicates) : duplicates_(duplicates) {}

void GraphBuilder::add_node(std::string_view label) {
  if (label.empty()) throw DataError("empty node label");
  nodes_.emplace(std::string(label), true);
}

bool GraphBuilder::add_edge(std::string_view a, std::string_view b, double weight) {
  if (a.empty() || b.empty()) throw DataError("empty node label");
  if (!std::isfinite(weight) || weight <= 0.0) {
    throw DataError("edge (" + std::string(a) + ", " + std::string(b) +
                    ") has non-positive or non-finite weight");
  }
  if (a == b) {
    ++self_loops_;
    return false;
  }
  std::string u(a), v(b);
  if (v < u) std::swap(u, v);
  add_node(u);
  add_node(v);
  auto [it, inserted] = edges_.try_emplace({u, v}, weight);
  if (!inserted) {
    if (duplicates_ == DuplicatePolicy::Error) {
      throw DataError("duplicate edge (" + u + ", " + v + ")");
    }
    it->second += weight;
  }
  return true;
}

WeightedGraph GraphBuilder::build() const {
  auto s = std::make_shared<WeightedGraph::Storage>();
  s->labels.reserve(nodes_.size());
  for (const auto& [label, _] : nodes_) s->labels.push_back(label);

  auto index = [&](const std::string& label) {
    auto it = std::lower_bound(s->labels.begin(), s->labels.end(), label);
    return static_cast<NodeIndex>(it - s->labels.begin());
  };

  // edges_ is ordered by (u, v) labels, which is canonical key order.
  s->edges.reserve(edges_.size());
  for (const auto& [pair, w] : edges_) s->edges.push_back(Edge{index(pair.first), index(pair.second), w});

  const std::size_t n = s->labels.size();
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : s->edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  s->offsets.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) s->offsets[v + 1] = s->offsets[v] + deg[v];
  s->adjacency.resize(s->offsets[n]);
  std::vector<std::size_t> fill(s->offsets.begin(), s->offsets.end() - 1);
  for (EdgeIndex i = 0; i < s->edges.size(); ++i) {
    const Edge& e = s->edges[i];
    s->adjacency[fill[e.u]++] = Neighbor{e.v, i};
    s->adjacency[fill[e.v]++] = Neighbor{e.u, i};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(s->adjacency.begin() + static_cast<std::ptrdiff_t>(s->offsets[v]),
              s->adjacency.begin() + static_cast<std::ptrdiff_t>(s->offsets[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }

  s->strengths.assign(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    double sum = 0.0;
    for (std::size_t k = s->offsets[v]; k < s->offsets[v + 1]; ++k) sum += s->edges[s->adjacency[k].edge].weight;
    s->strengths[v] = sum;
  }
  double total = 0.0;
  for (const Edge& e : s->edges) total += e.weight;
  s->total_weight = total;

  return WeightedGraph(std::move(s));
}

std::size_t degree(const WeightedGraph& g, std::string_view node) { return g.degree(g.index_of(node)); }

double strength(const WeightedGraph& g, std::string_view node) { return g.strength(g.index_of(node)); }

double total_weight(const WeightedGraph& g) { return g.total_weight(); }

std::vector<double> distance_view(const WeightedGraph& g) {
  std::vector<double> d;
  d.reserve(g.edge_count());
  for (const Edge& e : g.edges()) d.push_back(1.0 / e.weight);
  return d;
}

WeightedGraph edge_subgraph(const WeightedGraph& g, std::span<const EdgeIndex> edges) {
  GraphBuilder b;
  for (EdgeIndex e : edges) {
    const Edge& ed = g.edge(e);
    b.add_edge(g.label(ed.u), g.label(ed.v), ed.weight);
  }
  return b.build();
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const NodeIndex> nodes) {
  std::vector<char> keep(g.node_count(), 0);
  GraphBuilder b;
  for (NodeIndex v : nodes) {
    keep.at(v) = 1;
    b.add_node(g.label(v));
  }
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) b.add_edge(g.label(e.u), g.label(e.v), e.weight);
  }
  return b.build();
}

std::vector<std::size_t> connected_components(const WeightedGraph& g, std::size_t* count) {
  const std::size_t n = g.node_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::size_t next = 0;
  std::vector<NodeIndex> stack;
  for (NodeIndex s = 0; s < n; ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeIndex v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.neighbors(v)) {
        if (comp[nb.node] == unset) {
          comp[nb.node] = next;
          stack.push_back(nb.node);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

}  // namespace bb
