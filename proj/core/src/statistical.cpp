#include "backbone/statistical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "backbone/binomial.hpp"
#include "backbone/error.hpp"

namespace bb {
namespace {

constexpr FilterSet kPValueFilters{FilterKind::Threshold, FilterKind::Fraction};

struct IntegerTotals {
  std::vector<double> weights;
  std::vector<double> strength;
  double total = 0.0;
};

IntegerTotals integer_totals(const WeightedGraph& g, bool round) {
  IntegerTotals t;
  t.weights = integer_weights(g, round);
  t.strength.assign(g.node_count(), 0.0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    t.strength[g.edge(e).u] += t.weights[e];
    t.strength[g.edge(e).v] += t.weights[e];
    t.total += t.weights[e];
  }
  return t;
}

}  // namespace

std::vector<double> integer_weights(const WeightedGraph& g, bool round) {
  std::vector<double> w;
  w.reserve(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const double x = g.edge(e).weight;
    if (round) {
      w.push_back(std::max(1.0, std::round(x)));
    } else if (x != std::floor(x)) {
      const auto key = g.key(e);
      throw DataError("edge (" + key.u + ", " + key.v + ") has non-integer weight " + std::to_string(x) +
                      "; this null model needs integer weights (enable weight rounding)");
    } else {
      w.push_back(x);
    }
  }
  return w;
}

Backbone disparity(const WeightedGraph& g) {
  auto endpoint_p = [&](NodeIndex v, double w) {
    const std::size_t k = g.degree(v);
    if (k < 2) return 1.0;
    return std::pow(1.0 - w / g.strength(v), static_cast<double>(k - 1));
  };
  std::vector<double> p(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    p[e] = std::clamp(std::min(endpoint_p(ed.u, ed.weight), endpoint_p(ed.v, ed.weight)), 0.0, 1.0);
  }
  return Backbone(g, "disparity", Target::Edges, "p_value", Direction::LowerIsStronger, std::move(p), kPValueFilters);
}

Backbone marginal_likelihood(const WeightedGraph& g, const MethodParams& params) {
  const IntegerTotals t = integer_totals(g, params.round_weights);
  std::vector<double> p(g.edge_count(), 1.0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const double prob = t.strength[ed.u] * t.strength[ed.v] / (2.0 * t.total * t.total);
    p[e] = binomial_survival(t.total, prob, t.weights[e]);
  }
  return Backbone(g, "marginal_likelihood", Target::Edges, "p_value", Direction::LowerIsStronger, std::move(p),
                  kPValueFilters);
}

Backbone noise_corrected(const WeightedGraph& g, const MethodParams& params) {
  const IntegerTotals t = integer_totals(g, params.round_weights);
  std::vector<double> p(g.edge_count(), 1.0);
  std::size_t clamped = 0;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    double q = (t.strength[ed.u] / t.total) * (t.strength[ed.v] / t.total);
    if (q > 1.0) {
      q = 1.0;
      ++clamped;
    }
    p[e] = binomial_survival(t.total, q, t.weights[e]);
  }
  Backbone b(g, "noise_corrected", Target::Edges, "p_value", Direction::LowerIsStronger, std::move(p), kPValueFilters);
  if (clamped > 0) {
    b.add_warning("noise_corrected: pair probability exceeded 1 and was clamped on " + std::to_string(clamped) +
                  " edge(s)");
  }
  return b;
}

Backbone lans(const WeightedGraph& g) {
  // Fraction of incident edges at least as heavy, from one endpoint. Comparing
  // raw weights is the same as comparing w/s since s is shared.
  auto endpoint_p = [&](NodeIndex v, double w) {
    const auto nb = g.neighbors(v);
    std::size_t at_least = 0;
    for (const Neighbor& n : nb)
      if (g.edge(n.edge).weight >= w) ++at_least;
    return static_cast<double>(at_least) / static_cast<double>(nb.size());
  };
  std::vector<double> p(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    p[e] = std::min(endpoint_p(ed.u, ed.weight), endpoint_p(ed.v, ed.weight));
  }
  return Backbone(g, "lans", Target::Edges, "p_value", Direction::LowerIsStronger, std::move(p), kPValueFilters);
}

std::size_t mla_keep_count(const std::vector<double>& w) {
  const std::size_t k = w.size();
  if (k <= 1) return k;
  const double mean_w = std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(k);
  double var_w = 0.0;
  for (double x : w) var_w += (x - mean_w) * (x - mean_w);
  if (var_w == 0.0) return k;  // already evenly spread over all k edges

  const double s = mean_w * static_cast<double>(k);
  std::size_t best_c = 1;
  double best_r = -std::numeric_limits<double>::infinity();
  // c = k gives a constant hypothetical vector, for which the correlation is
  // undefined; only c < k competes.
  for (std::size_t c = 1; c < k; ++c) {
    const double level = s / static_cast<double>(c);
    const double mean_h = s / static_cast<double>(k);
    double cov = 0.0, var_h = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double h = (i < c ? level : 0.0) - mean_h;
      cov += h * (w[i] - mean_w);
      var_h += h * h;
    }
    const double r = cov / std::sqrt(var_h * var_w);
    if (r > best_r) {
      best_r = r;
      best_c = c;
    }
  }
  return best_c;
}

Backbone mla(const WeightedGraph& g) {
  std::vector<double> keep(g.edge_count(), 0.0);
  std::vector<Neighbor> nb;
  std::vector<double> w;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const auto span = g.neighbors(v);
    nb.assign(span.begin(), span.end());
    // Heaviest first; ties in canonical edge order.
    std::sort(nb.begin(), nb.end(), [&](const Neighbor& a, const Neighbor& b) {
      const double wa = g.edge(a.edge).weight, wb = g.edge(b.edge).weight;
      if (wa != wb) return wa > wb;
      return a.edge < b.edge;
    });
    w.clear();
    for (const Neighbor& n : nb) w.push_back(g.edge(n.edge).weight);
    const std::size_t c = mla_keep_count(w);
    for (std::size_t i = 0; i < c; ++i) keep[nb[i].edge] = 1.0;
  }
  return Backbone(g, "mla", Target::Edges, std::string(kBooleanValue), Direction::HigherIsStronger, std::move(keep),
                  FilterSet{FilterKind::Boolean});
}

}  // namespace bb
