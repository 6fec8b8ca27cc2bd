#include "ppr/bidirectional.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "ppr/walk.hpp"

namespace ppr {

SingleNodeParams single_node_params(Count n, Count degree_t, const EstimatorConfig& cfg) {
  SingleNodeParams params;
  const double root_n = std::sqrt(static_cast<double>(n));
  params.tau = static_cast<double>(degree_t) <= root_n
                   ? n
                   : static_cast<Count>(std::ceil(root_n));
  const double denom = cfg.c * cfg.c * cfg.alpha * cfg.p_f;
  const double low_cap =
      std::min(static_cast<double>(params.tau), (1.0 - cfg.alpha) * static_cast<double>(degree_t));
  params.w_L = static_cast<Count>(std::ceil(2.0 * low_cap / denom));
  params.w_H = static_cast<Count>(
      std::ceil(2.0 * (1.0 - cfg.alpha) * static_cast<double>(n) /
                (static_cast<double>(params.tau) * denom)));
  return params;
}

Count sorted_prefix_leq(AccessSession& session, VertexId t, double tau) {
  Count lo = 0, hi = session.deg(t);
  while (lo < hi) {
    const Count mid = lo + (hi - lo + 1) / 2;
    VertexId u = session.neigh_sorted(t, mid);
    if (static_cast<double>(session.deg(u)) <= tau)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

double single_node(AccessSession& session, VertexId t, const EstimatorConfig& cfg) {
  const AccessModel& model = session.model();
  if (!model.jump_enabled || !model.sorted_enabled || !model.adj_enabled)
    throw ModelViolationError("single_node: needs JUMP, NEIGH-SORTED and ADJ enabled");

  const Count n = session.n();
  if (n == 1) return 1.0;
  const Count dt = session.deg(t);
  if (dt == 0) return 1.0 / static_cast<double>(n);

  const SingleNodeParams params = single_node_params(n, dt, cfg);
  const double tau = static_cast<double>(params.tau);

  // |X_L| = longest prefix of neigh_sorted(t) with degree <= tau
  const Count x_low = sorted_prefix_leq(session, t, tau);

  const double nd = static_cast<double>(n);
  double est = cfg.alpha / nd;

  if (x_low > 0) {
    const double scale = (1.0 - cfg.alpha) * static_cast<double>(x_low) /
                         (nd * static_cast<double>(params.w_L));
    for (Count w = 0; w < params.w_L; ++w) {
      VertexId x = session.neigh_sorted(t, session.rng().below(x_low) + 1);
      WalkOutcome o = random_walk(session, x, cfg.alpha);
      est += scale / static_cast<double>(session.deg(o.endpoint));
    }
  }

  const double jump_scale = (1.0 - cfg.alpha) / static_cast<double>(params.w_H);
  for (Count w = 0; w < params.w_H; ++w) {
    VertexId start = session.jump();
    WalkOutcome o = random_walk(session, start, cfg.alpha);
    if (o.endpoint == t) continue;
    const Count de = session.deg(o.endpoint);
    if (static_cast<double>(de) > tau && session.adj(o.endpoint, t))
      est += jump_scale / static_cast<double>(de);
  }
  return est;
}

BiPprParams bippr_params(const EstimatorConfig& cfg) {
  BiPprParams params;
  params.r_max = std::min(0.5, std::cbrt(cfg.delta));
  params.n_r = static_cast<Count>(
      std::ceil(2.0 * params.r_max / (cfg.c * cfg.c * cfg.delta * cfg.p_f)));
  return params;
}

double bippr_avg_pair(AccessSession& session, VertexId s, VertexId t, const EstimatorConfig& cfg,
                      bool lazy) {
  if (lazy && (!session.model().sorted_enabled || !session.model().adj_enabled))
    throw ModelViolationError("bippr_avg_pair: lazy mode needs NEIGH-SORTED and ADJ");

  const BiPprParams params = bippr_params(cfg);
  const double degree_cap = 1.0 / params.r_max;
  PushState state = backwards_push_avg(session, t, params.r_max, cfg);

  if (!lazy) {
    const Count dt = session.deg(t);
    for (Count i = 1; i <= dt; ++i) {
      VertexId x = session.neigh(t, i);
      const Count dx = session.deg(x);
      if (static_cast<double>(dx) > degree_cap)
        state.r[x] += (1.0 - cfg.alpha) / static_cast<double>(dx);
    }
  }

  double sum = 0.0;
  for (Count i = 0; i < params.n_r; ++i) {
    WalkOutcome o = random_walk(session, s, cfg.alpha);
    double val = state.residual(o.endpoint);
    if (lazy && o.endpoint != t) {
      const Count du = session.deg(o.endpoint);
      if (static_cast<double>(du) > degree_cap && session.adj(o.endpoint, t))
        val += (1.0 - cfg.alpha) / static_cast<double>(du);
    }
    sum += val;
  }
  return state.reserve(s) + sum / static_cast<double>(params.n_r);
}

double jump_st_r_max(Count degree_t, Count n, const EstimatorConfig& cfg, StVariant variant) {
  if (variant == StVariant::worst)
    return std::min(0.5, std::sqrt(cfg.delta * static_cast<double>(degree_t) /
                                   static_cast<double>(n)));
  return std::min(0.5, std::cbrt(cfg.delta / static_cast<double>(n)));
}

SparseEstimate jump_bidirectional_st(AccessSession& session, VertexId t,
                                     const EstimatorConfig& cfg, StVariant variant) {
  if (!session.model().jump_enabled)
    throw ModelViolationError("jump_bidirectional_st: JUMP disabled in model");

  const Count n = session.n();
  const Count dt = session.deg(t);
  const double r_max = jump_st_r_max(dt, n, cfg, variant);

  PushState state;
  if (variant == StVariant::worst) {
    state = backwards_push(session, t, r_max, cfg);
  } else {
    state = backwards_push_avg(session, t, r_max, cfg);
    // fold the skipped high-degree neighbors back in so the push invariant
    // matches what the walk averaging assumes
    const double degree_cap = 1.0 / r_max;
    for (Count i = 1; i <= dt; ++i) {
      VertexId x = session.neigh(t, i);
      const Count dx = session.deg(x);
      if (static_cast<double>(dx) > degree_cap)
        state.r[x] += (1.0 - cfg.alpha) / static_cast<double>(dx);
    }
  }

  const Count w_total = static_cast<Count>(
      std::ceil(kappa_mc(cfg) * static_cast<double>(n) * r_max / cfg.delta));
  std::map<VertexId, std::pair<double, Count>> buckets;
  for (Count w = 0; w < w_total; ++w) {
    VertexId start = session.jump();
    WalkOutcome o = random_walk(session, start, cfg.alpha);
    auto& slot = buckets[start];
    slot.first += state.residual(o.endpoint);
    slot.second += 1;
  }

  SparseEstimate est(state.p.begin(), state.p.end());
  for (const auto& [u, slot] : buckets)
    est[u] = state.reserve(u) + slot.first / static_cast<double>(slot.second);
  return est;
}

}  // namespace ppr
