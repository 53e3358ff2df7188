#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "backbone/error.hpp"
#include "backbone/statistical.hpp"

namespace bb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double softplus(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

// 1 - y_i y_j with y = exp(-beta).
double gap(double beta_sum) { return -std::expm1(-beta_sum); }

// Connection probability from log(x_i x_j) and beta_i + beta_j.
double probability(double log_xx, double beta_sum) {
  if (log_xx == kInf) return 1.0;
  const double log_z = log_xx - beta_sum;
  return 1.0 / (1.0 + std::exp(std::log(gap(beta_sum)) - log_z));
}

struct Observed {
  std::vector<NodeIndex> nodes;  // active nodes
  std::vector<double> degree;
  std::vector<double> strength;
  std::vector<char> saturated;
};

struct Expectation {
  std::vector<double> degree;
  std::vector<double> strength;
};

Expectation expectations(const Observed& obs, const std::vector<double>& log_x, const std::vector<double>& beta) {
  const std::size_t n = obs.nodes.size();
  Expectation e{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double t = beta[i] + beta[j];
      const double p = probability(log_x[i] + log_x[j], t);
      const double w = p / gap(t);
      e.degree[i] += p;
      e.degree[j] += p;
      e.strength[i] += w;
      e.strength[j] += w;
    }
  }
  return e;
}

double residual_of(const Observed& obs, const Expectation& e) {
  double r = 0.0;
  for (std::size_t i = 0; i < obs.nodes.size(); ++i) {
    r = std::max(r, std::abs(e.degree[i] - obs.degree[i]));
    r = std::max(r, std::abs(e.strength[i] - obs.strength[i]) / std::max(1.0, obs.strength[i]));
  }
  if (std::isnan(r)) return kInf;
  return r;
}

bool feasible(const std::vector<double>& beta) {
  // y_i y_j < 1 for every pair <=> the two smallest betas sum to > 0.
  if (beta.size() < 2) return true;
  double lo1 = kInf, lo2 = kInf;
  for (double b : beta) {
    if (!std::isfinite(b)) return false;
    if (b < lo1) {
      lo2 = lo1;
      lo1 = b;
    } else if (b < lo2) {
      lo2 = b;
    }
  }
  return lo1 + lo2 > 0.0;
}

// Damped multiplicative fixed point x <- x k/<k>, y <- y s/<s>, done in log
// space. Damping mixes the old and updated values of x and y linearly.
std::size_t fixed_point(const Observed& obs, std::vector<double>& log_x, std::vector<double>& beta,
                        const EcmOptions& opt, double& residual) {
  const std::size_t n = obs.nodes.size();
  Expectation e = expectations(obs, log_x, beta);
  residual = residual_of(obs, e);
  std::size_t it = 0;
  std::vector<double> next_lx(n), next_beta(n);
  while (residual > opt.tol && it < opt.max_iter) {
    ++it;
    for (std::size_t i = 0; i < n; ++i) {
      next_lx[i] = obs.saturated[i]
                       ? kInf
                       : log_x[i] + std::log((1.0 - opt.damping) * obs.degree[i] / e.degree[i] + opt.damping);
      next_beta[i] = beta[i] - std::log((1.0 - opt.damping) * obs.strength[i] / e.strength[i] + opt.damping);
    }
    // Pull the y update back toward the previous point until y_i y_j < 1.
    for (int shrink = 0; !feasible(next_beta) && shrink < 60; ++shrink) {
      for (std::size_t i = 0; i < n; ++i) next_beta[i] = 0.5 * (next_beta[i] + beta[i]);
    }
    if (!feasible(next_beta)) break;
    log_x = next_lx;
    beta = next_beta;
    e = expectations(obs, log_x, beta);
    residual = residual_of(obs, e);
  }
  return it;
}

// Newton's method on the convex negative log-likelihood in the variables
// a_i = ln(x_i y_i) (non-saturated nodes) and beta_i = -ln y_i.
std::size_t newton(const Observed& obs, std::vector<double>& log_x, std::vector<double>& beta,
                   const EcmOptions& opt, double& residual) {
  const std::size_t n = obs.nodes.size();
  std::vector<int> a_index(n, -1);
  int nv = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!obs.saturated[i]) a_index[i] = nv++;
  const int a_count = nv;
  auto b_index = [&](std::size_t i) { return a_count + static_cast<int>(i); };
  nv += static_cast<int>(n);

  std::vector<double> a(n, kInf);
  for (std::size_t i = 0; i < n; ++i)
    if (!obs.saturated[i]) a[i] = log_x[i] - beta[i];

  auto objective = [&](const std::vector<double>& av, const std::vector<double>& bv) {
    if (!feasible(bv)) return kInf;
    double f = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double t = bv[i] + bv[j];
        const double log_d = std::log(gap(t));
        if (obs.saturated[i] || obs.saturated[j]) {
          f -= log_d;
          if (!obs.saturated[i]) f += av[i];
          if (!obs.saturated[j]) f += av[j];
        } else {
          f += softplus(av[i] + av[j] - log_d);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!obs.saturated[i]) f -= obs.degree[i] * av[i];
      f -= (obs.degree[i] - obs.strength[i]) * bv[i];
    }
    return f;
  };

  Eigen::MatrixXd hess(nv, nv);
  Eigen::VectorXd grad(nv);
  std::size_t it = 0;
  double mu = 0.0;
  {
    Expectation e = expectations(obs, log_x, beta);
    residual = residual_of(obs, e);
  }
  double f_current = objective(a, beta);
  while (residual > opt.tol && it < opt.newton_max_iter) {
    ++it;
    hess.setZero();
    grad.setZero();
    for (std::size_t i = 0; i < n; ++i) {
      if (!obs.saturated[i]) grad[a_index[i]] -= obs.degree[i];
      grad[b_index(i)] -= obs.degree[i] - obs.strength[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double t = beta[i] + beta[j];
        const double d = gap(t);
        const bool pinned = obs.saturated[i] || obs.saturated[j];
        const double p = pinned ? 1.0 : 1.0 / (1.0 + std::exp(std::log(d) - a[i] - a[j]));
        const double q = pinned ? 0.0 : 1.0 / (1.0 + std::exp(a[i] + a[j] - std::log(d)));  // 1 - p
        const double r = (1.0 - d) / d;  // y_i y_j / (1 - y_i y_j)
        const double f_u = p;
        const double f_t = -p * r;
        const double f_uu = p * q;
        const double f_ut = -p * q * r;
        const double f_tt = p * q * r * r + p * r / d;
        const int bi = b_index(i), bj = b_index(j);
        grad[bi] += f_t;
        grad[bj] += f_t;
        hess(bi, bi) += f_tt;
        hess(bj, bj) += f_tt;
        hess(bi, bj) += f_tt;
        hess(bj, bi) += f_tt;
        const int ai = a_index[i], aj = a_index[j];
        for (int av : {ai, aj}) {
          if (av < 0) continue;
          grad[av] += f_u;
          for (int aw : {ai, aj}) {
            if (aw >= 0) hess(av, aw) += f_uu;
          }
          hess(av, bi) += f_ut;
          hess(av, bj) += f_ut;
          hess(bi, av) += f_ut;
          hess(bj, av) += f_ut;
        }
      }
    }

    const double diag_scale = std::max(1e-300, hess.diagonal().cwiseAbs().maxCoeff());
    bool stepped = false;
    for (int attempt = 0; attempt < 40 && !stepped; ++attempt) {
      Eigen::MatrixXd damped = hess;
      damped.diagonal().array() += mu * diag_scale + 1e-14 * diag_scale;
      Eigen::LDLT<Eigen::MatrixXd> ldlt(damped);
      Eigen::VectorXd step = -ldlt.solve(grad);
      if (ldlt.info() != Eigen::Success || !step.allFinite() || step.dot(grad) >= 0.0) {
        mu = std::max(1e-10, mu * 10.0);
        continue;
      }
      const double largest = step.cwiseAbs().maxCoeff();
      if (largest > 4.0) step *= 4.0 / largest;

      double scale = 1.0;
      const double slope = step.dot(grad);
      for (int ls = 0; ls < 60; ++ls, scale *= 0.5) {
        std::vector<double> a_try = a, b_try = beta;
        for (std::size_t i = 0; i < n; ++i) {
          if (a_index[i] >= 0) a_try[i] += scale * step[a_index[i]];
          b_try[i] = std::min(700.0, b_try[i] + scale * step[b_index(i)]);
        }
        const double f_try = objective(a_try, b_try);
        bool accept = f_try <= f_current + 1e-4 * scale * slope;
        if (!accept && std::isfinite(f_try)) {
          // Also accept a step that halves the moment residual.
          std::vector<double> lx_try(n);
          for (std::size_t i = 0; i < n; ++i) lx_try[i] = obs.saturated[i] ? kInf : a_try[i] + b_try[i];
          accept = residual_of(obs, expectations(obs, lx_try, b_try)) < 0.5 * residual;
        }
        if (accept) {
          a = std::move(a_try);
          beta = std::move(b_try);
          f_current = f_try;
          stepped = true;
          break;
        }
      }
      if (!stepped) mu = std::max(1e-10, mu * 10.0);
    }
    if (stepped) mu *= 0.1;
    if (mu < 1e-12) mu = 0.0;

    for (std::size_t i = 0; i < n; ++i) log_x[i] = obs.saturated[i] ? kInf : a[i] + beta[i];
    Expectation e = expectations(obs, log_x, beta);
    residual = residual_of(obs, e);
    if (!stepped) break;
  }
  return it;
}

}  // namespace

double EcmFit::x(NodeIndex i) const { return std::exp(log_x.at(i)); }
double EcmFit::y(NodeIndex i) const { return std::exp(-beta.at(i)); }

double EcmFit::connection_probability(NodeIndex i, NodeIndex j) const {
  return probability(log_x.at(i) + log_x.at(j), beta.at(i) + beta.at(j));
}

double EcmFit::p_value(NodeIndex i, NodeIndex j, double w) const {
  const double p = connection_probability(i, j);
  if (w <= 1.0) return p;
  return std::clamp(p * std::exp(-(beta[i] + beta[j]) * (w - 1.0)), 0.0, 1.0);
}

double EcmFit::expected_degree(NodeIndex i) const {
  double sum = 0.0;
  for (NodeIndex j = 0; j < active.size(); ++j)
    if (j != i && active[j]) sum += connection_probability(i, j);
  return sum;
}

double EcmFit::expected_strength(NodeIndex i) const {
  double sum = 0.0;
  for (NodeIndex j = 0; j < active.size(); ++j)
    if (j != i && active[j]) sum += connection_probability(i, j) / gap(beta[i] + beta[j]);
  return sum;
}

EcmFit ecm_fit(const WeightedGraph& g, const EcmOptions& options, bool round_weights) {
  const std::vector<double> weights = integer_weights(g, round_weights);
  const std::size_t n = g.node_count();

  Observed obs;
  std::vector<double> strength(n, 0.0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    strength[g.edge(e).u] += weights[e];
    strength[g.edge(e).v] += weights[e];
  }
  for (NodeIndex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      throw MethodError("ECM null model is degenerate: node '" + g.label(v) + "' has zero strength");
    }
    obs.nodes.push_back(v);
    obs.degree.push_back(static_cast<double>(g.degree(v)));
    obs.strength.push_back(strength[v]);
  }
  const std::size_t na = obs.nodes.size();
  obs.saturated.assign(na, 0);
  for (std::size_t i = 0; i < na; ++i) obs.saturated[i] = obs.degree[i] == static_cast<double>(na - 1) ? 1 : 0;

  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  std::vector<double> log_x(na), beta(na);
  for (std::size_t i = 0; i < na; ++i) {
    log_x[i] = obs.saturated[i] ? kInf : std::log(obs.degree[i] / std::sqrt(two_m));
    beta[i] = std::log1p(1.0 / obs.strength[i]);  // y = s / (1 + s)
  }

  double residual = kInf;
  std::size_t iterations = 0;
  EcmSolver used = EcmSolver::FixedPoint;
  if (options.solver != EcmSolver::Newton) {
    iterations += fixed_point(obs, log_x, beta, options, residual);
  }
  if (residual > options.tol && options.solver != EcmSolver::FixedPoint) {
    used = EcmSolver::Newton;
    iterations += newton(obs, log_x, beta, options, residual);
  }
  if (!(residual <= options.tol)) {
    std::ostringstream msg;
    msg << "ECM fit did not converge after " << iterations << " iterations (residual " << residual << ", tol "
        << options.tol << ")";
    throw MethodError(msg.str());
  }

  EcmFit fit;
  fit.log_x.assign(n, 0.0);
  fit.beta.assign(n, 0.0);
  fit.active.assign(n, 0);
  for (std::size_t i = 0; i < na; ++i) {
    fit.log_x[obs.nodes[i]] = log_x[i];
    fit.beta[obs.nodes[i]] = beta[i];
    fit.active[obs.nodes[i]] = 1;
  }
  fit.residual = residual;
  fit.iterations = iterations;
  fit.solver_used = used;
  return fit;
}

Backbone ecm(const WeightedGraph& g, const MethodParams& params) {
  EcmOptions options;
  options.tol = params.get("tol", options.tol);
  options.max_iter = static_cast<std::size_t>(params.get("max_iter", static_cast<double>(options.max_iter)));
  options.damping = params.get("damping", options.damping);
  const int solver = static_cast<int>(params.get("solver", 0.0));
  if (solver < 0 || solver > 2) throw UsageError("ecm: solver must be 0 (auto), 1 (fixed point) or 2 (newton)");
  options.solver = static_cast<EcmSolver>(solver);
  if (!(options.tol > 0.0)) throw UsageError("ecm: tol must be positive");
  if (options.damping < 0.0 || options.damping >= 1.0) throw UsageError("ecm: damping must lie in [0, 1)");

  const EcmFit fit = ecm_fit(g, options, params.round_weights);
  const std::vector<double> weights = integer_weights(g, params.round_weights);
  std::vector<double> p(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) p[e] = fit.p_value(g.edge(e).u, g.edge(e).v, weights[e]);
  return Backbone(g, "ecm", Target::Edges, "p_value", Direction::LowerIsStronger, std::move(p),
                  FilterSet{FilterKind::Threshold, FilterKind::Fraction});
}

}  // namespace bb
