#pragma once

#include <string_view>
#include <vector>

#include "backbone/backbone.hpp"
#include "backbone/graph.hpp"

namespace bb {

/// Involvement of each edge from each of its endpoints, computed on the
/// shortest-path DAG (distance 1/w) rooted at that endpoint: the share of all
/// shortest paths from the endpoint to every other node whose first hop is
/// the edge. `from_u[e]` is the value seen from edge(e).u, `from_v[e]` from
/// edge(e).v.
struct Involvement {
  std::vector<double> from_u;
  std::vector<double> from_v;
};

Involvement edge_involvement(const WeightedGraph& g);

enum class NullModel { Uniform };

NullModel parse_null_model(std::string_view name);

/// p = (1 - I)^max(1, c (k - 1)) per endpoint under the uniform null.
double glab_endpoint_p_value(double involvement, double c, std::size_t degree);

/// Globally and locally adaptive backbone. Params: c (default 1), must be
/// >= 0. Edge p-value is the minimum over endpoints.
Backbone glab(const WeightedGraph& g, const MethodParams& params = {}, NullModel null_model = NullModel::Uniform);

}  // namespace bb
