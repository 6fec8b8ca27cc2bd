#include "ppr/push.hpp"

#include <cmath>
#include <set>
#include <utility>
#include <vector>

namespace ppr {

namespace {

void add_residual(PushState& state, VertexId u, double amount) {
  double& slot = state.r[u];
  slot += amount;
  if (slot < kResidualFloor) state.r.erase(u);
}

// Runs the threshold loop until every residual is <= r_max. Vertices enter
// the frontier once per crossing; stale entries are skipped on pop.
void drain(AccessSession& session, PushState& state, double r_max, double alpha,
           const PushObserver& observer) {
  std::set<VertexId> queued(state.frontier.begin(), state.frontier.end());
  while (!state.frontier.empty()) {
    VertexId v = state.frontier.front();
    state.frontier.pop_front();
    queued.erase(v);
    auto it = state.r.find(v);
    if (it == state.r.end() || it->second <= r_max) continue;
    const double rv = it->second;
    state.r.erase(it);

    const Count d = session.deg(v);
    if (d == 0) {
      // Walks cannot leave v, so its whole residual is settled probability.
      state.p[v] += rv;
    } else {
      state.p[v] += alpha * rv;
      for (Count i = 1; i <= d; ++i) {
        VertexId u = session.neigh(v, i);
        const Count du = session.deg(u);
        add_residual(state, u, (1.0 - alpha) * rv / static_cast<double>(du));
        auto ru = state.r.find(u);
        if (ru != state.r.end() && ru->second > r_max && queued.insert(u).second)
          state.frontier.push_back(u);
      }
    }
    if (observer) observer(state);
  }
}

}  // namespace

PushState backwards_push(AccessSession& session, VertexId t, double r_max,
                         const EstimatorConfig& cfg, const PushObserver& observer) {
  if (!session.graph().has_vertex(t))
    throw InvalidVertexError("backwards_push: invalid target " + std::to_string(t));
  PushState state;
  state.r[t] = 1.0;
  if (1.0 > r_max) state.frontier.push_back(t);
  drain(session, state, r_max, cfg.alpha, observer);
  return state;
}

namespace {

PushState power_rounds(AccessSession& session, VertexId anchor, Count rounds_L, double alpha,
                       bool forward) {
  if (!session.graph().has_vertex(anchor))
    throw InvalidVertexError("power method: invalid vertex " + std::to_string(anchor));
  if (rounds_L < 0) throw InvalidIndexError("power method: rounds must be >= 0");

  PushState state;
  state.r[anchor] = 1.0;
  for (Count round = 0; round < rounds_L; ++round) {
    std::map<VertexId, double> next;
    for (auto [v, rv] : state.r) {
      const Count d = session.deg(v);
      if (d == 0) {
        state.p[v] += rv;
        continue;
      }
      state.p[v] += alpha * rv;
      for (Count i = 1; i <= d; ++i) {
        VertexId u = session.neigh(v, i);
        // target form divides by the receiver's degree, source form by the
        // sender's
        const double share = forward ? (1.0 - alpha) * rv / static_cast<double>(d)
                                     : (1.0 - alpha) * rv /
                                           static_cast<double>(session.deg(u));
        next[u] += share;
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second < kResidualFloor ? next.erase(it) : std::next(it);
    state.r = std::move(next);
  }
  return state;
}

}  // namespace

PushState power_method_target(AccessSession& session, VertexId t, Count rounds_L,
                              const EstimatorConfig& cfg) {
  return power_rounds(session, t, rounds_L, cfg.alpha, /*forward=*/false);
}

PushState power_method_source(AccessSession& session, VertexId s, Count rounds_L,
                              const EstimatorConfig& cfg) {
  return power_rounds(session, s, rounds_L, cfg.alpha, /*forward=*/true);
}

SparseEstimate rand_push(AccessSession& session, PushState init, double theta, Count rounds_L,
                         const EstimatorConfig& cfg) {
  if (!session.model().sorted_enabled)
    throw ModelViolationError("rand_push: NEIGH-SORTED disabled in model");
  if (theta <= 0.0) throw InvalidIndexError("rand_push: theta must be positive");

  const double alpha = cfg.alpha;
  std::map<VertexId, double> p_hat = std::move(init.p);
  std::map<VertexId, double> r_hat = std::move(init.r);

  for (Count round = 0; round < rounds_L; ++round) {
    std::map<VertexId, double> next;
    for (auto [v, rv] : r_hat) {
      if (rv <= 0.0) continue;
      const Count d = session.deg(v);
      if (d == 0) {
        p_hat[v] += rv;
        continue;
      }
      p_hat[v] += alpha * rv;
      const double tau = session.rng().uniform(0.0, theta);
      for (Count i = 1; i <= d; ++i) {
        VertexId u = session.neigh_sorted(v, i);
        const Count du = session.deg(u);
        const double delta = (1.0 - alpha) * rv / static_cast<double>(du);
        if (delta < tau) break;
        next[u] += std::max(delta, theta);
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second < kResidualFloor ? next.erase(it) : std::next(it);
    r_hat = std::move(next);
  }
  return p_hat;
}

PushParams hybrid_params(Count degree_t, Count n, const EstimatorConfig& cfg) {
  PushParams params;
  params.r_max = std::min(0.5, std::sqrt(static_cast<double>(degree_t) * cfg.delta /
                                         static_cast<double>(n)));
  params.rounds_L =
      static_cast<Count>(std::ceil(std::log(cfg.c * cfg.delta / 2.0) / std::log(1.0 - cfg.alpha)));
  params.theta = cfg.c * cfg.c * cfg.delta * cfg.p_f / (4.0 * static_cast<double>(params.rounds_L));
  return params;
}

SparseEstimate hybrid_single_target(AccessSession& session, VertexId t,
                                    const EstimatorConfig& cfg) {
  if (!session.model().sorted_enabled)
    throw ModelViolationError("hybrid_single_target: NEIGH-SORTED disabled in model");
  const Count dt = session.deg(t);
  const PushParams params = hybrid_params(dt, session.n(), cfg);
  PushState state = backwards_push(session, t, params.r_max, cfg);
  return rand_push(session, std::move(state), params.theta, params.rounds_L, cfg);
}

PushState backwards_push_avg(AccessSession& session, VertexId t, double r_max,
                             const EstimatorConfig& cfg, const PushObserver& observer) {
  if (!session.graph().has_vertex(t))
    throw InvalidVertexError("backwards_push_avg: invalid target " + std::to_string(t));
  if (r_max <= 0.0 || r_max >= 1.0)
    throw InvalidIndexError("backwards_push_avg: r_max must lie in (0, 1)");

  const double alpha = cfg.alpha;
  const double degree_cap = 1.0 / r_max;
  PushState state;
  state.p[t] = alpha;

  const Count dt = session.deg(t);
  if (session.model().sorted_enabled) {
    // ascending degree, so the first neighbor over the cap ends the scan
    for (Count i = 1; i <= dt; ++i) {
      VertexId y = session.neigh_sorted(t, i);
      const Count dy = session.deg(y);
      if (static_cast<double>(dy) > degree_cap) break;
      state.r[y] = (1.0 - alpha) / static_cast<double>(dy);
    }
  } else {
    for (Count i = 1; i <= dt; ++i) {
      VertexId y = session.neigh(t, i);
      const Count dy = session.deg(y);
      if (static_cast<double>(dy) > degree_cap) continue;
      state.r[y] = (1.0 - alpha) / static_cast<double>(dy);
    }
  }
  // seed the frontier from the map so the drain order (and with it the
  // final state) does not depend on which scan fed it
  for (const auto& [y, ry] : state.r)
    if (ry > r_max) state.frontier.push_back(y);
  if (observer) observer(state);

  drain(session, state, r_max, alpha, observer);
  return state;
}

}  // namespace ppr
