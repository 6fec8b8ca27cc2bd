#include "ppr/exact.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace ppr {

namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (!g.has_vertex(v))
    throw InvalidVertexError("exact oracle: vertex " + std::to_string(v) + " out of range");
}

// Rounds after which the fixed-point iteration is within eps: (1-α)^L <= eps.
Count rounds_for(double alpha, double eps) {
  return static_cast<Count>(std::ceil(std::log(eps) / std::log(1.0 - alpha)));
}

// Dense solves are exact and independent of the DP oracle's series; past
// this size fall back to iteration (CLI-scale graphs, tolerance still eps).
constexpr VertexId kDenseLimit = 4096;

}  // namespace

PprVector exact_single_target(const Graph& g, const EstimatorConfig& cfg, VertexId t,
                              double eps) {
  check_vertex(g, t);
  const auto n = static_cast<std::size_t>(g.n);
  const double alpha = cfg.alpha;
  PprVector out;
  out.kind = PprVector::Kind::single_target;
  out.anchor = t;
  out.values.assign(n, 0.0);

  if (g.n <= kDenseLimit) {
    // x[u] = α·1{u=t} + (1−α)·mean_{w∈N(u)} x[w]; isolated rows pinned to 1{u=t}.
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(g.n, g.n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(g.n);
    for (VertexId u = 0; u < g.n; ++u) {
      const auto& nu = g.neigh[static_cast<std::size_t>(u)];
      if (nu.empty()) {
        b[u] = (u == t) ? 1.0 : 0.0;
        continue;
      }
      const double w = (1.0 - alpha) / static_cast<double>(nu.size());
      for (VertexId v : nu) A(u, v) -= w;
      b[u] = (u == t) ? alpha : 0.0;
    }
    Eigen::VectorXd x = Eigen::PartialPivLU<Eigen::MatrixXd>(A).solve(b);
    for (VertexId u = 0; u < g.n; ++u) out.values[static_cast<std::size_t>(u)] = x[u];
    return out;
  }

  std::vector<double> x(n, 0.0), next(n, 0.0);
  const Count rounds = rounds_for(alpha, eps);
  for (Count r = 0; r < rounds; ++r) {
    for (std::size_t u = 0; u < n; ++u) {
      const auto& nu = g.neigh[u];
      if (nu.empty()) {
        next[u] = (static_cast<VertexId>(u) == t) ? 1.0 : 0.0;
        continue;
      }
      double acc = 0.0;
      for (VertexId w : nu) acc += x[static_cast<std::size_t>(w)];
      next[u] = (static_cast<VertexId>(u) == t ? alpha : 0.0) +
                (1.0 - alpha) * acc / static_cast<double>(nu.size());
    }
    x.swap(next);
  }
  out.values = std::move(x);
  return out;
}

PprVector exact_single_source(const Graph& g, const EstimatorConfig& cfg, VertexId s,
                              double eps) {
  check_vertex(g, s);
  const auto n = static_cast<std::size_t>(g.n);
  const double alpha = cfg.alpha;
  PprVector out;
  out.kind = PprVector::Kind::single_source;
  out.anchor = s;
  out.values.assign(n, 0.0);

  if (g.n <= kDenseLimit) {
    // y[v] = α·1{v=s} + (1−α)·Σ_{w∈N(v)} y[w]/d(w); isolated rows pinned.
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(g.n, g.n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(g.n);
    for (VertexId v = 0; v < g.n; ++v) {
      const auto& nv = g.neigh[static_cast<std::size_t>(v)];
      if (nv.empty()) {
        b[v] = (v == s) ? 1.0 : 0.0;
        continue;
      }
      for (VertexId w : nv) A(v, w) -= (1.0 - alpha) / static_cast<double>(g.degree(w));
      b[v] = (v == s) ? alpha : 0.0;
    }
    Eigen::VectorXd y = Eigen::PartialPivLU<Eigen::MatrixXd>(A).solve(b);
    for (VertexId v = 0; v < g.n; ++v) out.values[static_cast<std::size_t>(v)] = y[v];
    return out;
  }

  std::vector<double> y(n, 0.0), next(n, 0.0);
  const Count rounds = rounds_for(alpha, eps);
  for (Count r = 0; r < rounds; ++r) {
    for (std::size_t v = 0; v < n; ++v) {
      const auto& nv = g.neigh[v];
      if (nv.empty()) {
        next[v] = (static_cast<VertexId>(v) == s) ? 1.0 : 0.0;
        continue;
      }
      double acc = 0.0;
      for (VertexId w : nv)
        acc += y[static_cast<std::size_t>(w)] / static_cast<double>(g.degree(w));
      next[v] = (static_cast<VertexId>(v) == s ? alpha : 0.0) + (1.0 - alpha) * acc;
    }
    y.swap(next);
  }
  out.values = std::move(y);
  return out;
}

double exact_pagerank(const Graph& g, const EstimatorConfig& cfg, VertexId t, double eps) {
  PprVector x = exact_single_target(g, cfg, t, eps);
  double sum = 0.0;
  for (double v : x.values) sum += v;
  return sum / static_cast<double>(g.n);
}

PprVector truncated_dp_oracle(const Graph& g, const EstimatorConfig& cfg, VertexId t,
                              Count max_len) {
  check_vertex(g, t);
  if (max_len < 0) throw InvalidIndexError("truncated_dp_oracle: max_len must be >= 0");
  const auto n = static_cast<std::size_t>(g.n);
  const double alpha = cfg.alpha;

  // w[u] = P[k-step walk from u is at t]; isolated u never moves.
  std::vector<double> w(n, 0.0), next(n, 0.0), acc(n, 0.0);
  w[static_cast<std::size_t>(t)] = 1.0;
  double coef = alpha;
  for (Count k = 0;; ++k) {
    for (std::size_t u = 0; u < n; ++u) acc[u] += coef * w[u];
    if (k == max_len) break;
    for (std::size_t u = 0; u < n; ++u) {
      const auto& nu = g.neigh[u];
      if (nu.empty()) {
        next[u] = w[u];
        continue;
      }
      double s = 0.0;
      for (VertexId x : nu) s += w[static_cast<std::size_t>(x)];
      next[u] = s / static_cast<double>(nu.size());
    }
    w.swap(next);
    coef *= (1.0 - alpha);
  }

  PprVector out;
  out.kind = PprVector::Kind::single_target;
  out.anchor = t;
  out.values = std::move(acc);
  return out;
}

}  // namespace ppr
