#include "ppr/walk.hpp"

#include <cmath>
#include <map>

namespace ppr {

WalkOutcome random_walk(AccessSession& session, VertexId start, double alpha) {
  VertexId v = start;
  Count steps = 0;
  for (;;) {
    if (session.rng().bernoulli(alpha)) return {v, steps};
    Count d = session.deg(v);
    if (d == 0) return {v, steps};
    v = session.neigh(v, session.rng().below(d) + 1);
    ++steps;
  }
}

Count mc_walk_count(const EstimatorConfig& cfg) {
  return static_cast<Count>(std::ceil(kappa_mc(cfg) / cfg.delta));
}

SparseEstimate mc_single_source(AccessSession& session, VertexId s, const EstimatorConfig& cfg) {
  const Count W = mc_walk_count(cfg);
  std::map<VertexId, Count> hits;
  for (Count w = 0; w < W; ++w) ++hits[random_walk(session, s, cfg.alpha).endpoint];
  SparseEstimate est;
  for (auto [v, cnt] : hits)
    est[v] = static_cast<double>(cnt) / static_cast<double>(W);
  return est;
}

Count bmc_walk_count(Count degree_t, const EstimatorConfig& cfg) {
  return static_cast<Count>(std::ceil(kappa_mc(cfg) * static_cast<double>(degree_t) / cfg.delta));
}

SparseEstimate bmc_single_target(AccessSession& session, VertexId t, const EstimatorConfig& cfg) {
  const Count dt = session.deg(t);
  if (dt == 0) return {{t, 1.0}};
  const Count W = bmc_walk_count(dt, cfg);
  std::map<VertexId, Count> hits;
  for (Count w = 0; w < W; ++w) ++hits[random_walk(session, t, cfg.alpha).endpoint];
  SparseEstimate est;
  for (auto [u, cnt] : hits) {
    // frequency estimates π(t,u); reversibility turns it into π(u,t)
    const Count du = session.deg(u);
    est[u] = static_cast<double>(cnt) / static_cast<double>(W) * static_cast<double>(dt) /
             static_cast<double>(du);
  }
  return est;
}

Count bmc_node_walk_count(Count degree_t, const EstimatorConfig& cfg) {
  const double w = static_cast<double>(degree_t) / (cfg.c * cfg.c * cfg.alpha * cfg.p_f);
  return std::max<Count>(1, static_cast<Count>(std::ceil(w)));
}

double bmc_single_node(AccessSession& session, VertexId t, const EstimatorConfig& cfg) {
  const auto n = static_cast<double>(session.n());
  if (session.n() == 1) return 1.0;
  const Count dt = session.deg(t);
  if (dt == 0) return 1.0 / n;
  const Count W = bmc_node_walk_count(dt, cfg);
  double sum = 0.0;
  for (Count w = 0; w < W; ++w) {
    WalkOutcome o = random_walk(session, t, cfg.alpha);
    sum += static_cast<double>(dt) / static_cast<double>(session.deg(o.endpoint));
  }
  return sum / (n * static_cast<double>(W));
}

}  // namespace ppr
