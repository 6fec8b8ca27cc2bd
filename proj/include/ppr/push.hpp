#pragma once

#include <deque>
#include <functional>
#include <map>

#include "ppr/access.hpp"
#include "ppr/types.hpp"

namespace ppr {

struct PushState {
  std::map<VertexId, double> p;  // reserves
  std::map<VertexId, double> r;  // residuals
  std::deque<VertexId> frontier;

  double reserve(VertexId v) const {
    auto it = p.find(v);
    return it == p.end() ? 0.0 : it->second;
  }
  double residual(VertexId v) const {
    auto it = r.find(v);
    return it == r.end() ? 0.0 : it->second;
  }
};

struct PushParams {
  double r_max = 0.0;
  double theta = 0.0;
  Count rounds_L = 0;
};

/** Residuals below this are dropped; every contract tolerance is >= 1e-9 so
 *  the cutoff is invisible to tests. */
inline constexpr double kResidualFloor = 1e-15;

/** Called after each completed push with the current state. */
using PushObserver = std::function<void(const PushState&)>;

/** Reverse local push at t: while some r(v) > r_max, move α·r(v) to p(v)
 *  and (1−α)·r(v)/d(u) to each neighbor u's residual (FIFO order over
 *  threshold crossings). The invariant
 *    π(u,t) = p(u) + Σ_w r(w)·π(u,w)
 *  holds after every push; at termination 0 ≤ π(u,t) − p(u) ≤ r_max.
 *  A degree-0 vertex moves its whole residual to reserve. */
PushState backwards_push(AccessSession& session, VertexId t, double r_max,
                         const EstimatorConfig& cfg, const PushObserver& observer = {});

/** rounds_L synchronous rounds where every positive-residual vertex pushes;
 *  max residual after L rounds is at most (1−α)^L. */
PushState power_method_target(AccessSession& session, VertexId t, Count rounds_L,
                              const EstimatorConfig& cfg);

/** Forward twin: residuals flow s → neighbors with the sender's degree, so
 *  p approximates π(s,·) under the same residual law. */
PushState power_method_source(AccessSession& session, VertexId s, Count rounds_L,
                              const EstimatorConfig& cfg);

/** Randomized synchronous push. Each pushing vertex draws one τ ~ U[0,θ)
 *  and feeds the increasing-degree neighbor prefix with Δ = (1−α)·r̂(v)/d(u)
 *  ≥ τ, adding max{Δ,θ}; reserves α·r̂(v) per round are summed into the
 *  returned estimate. Unbiased per round; Var[p̂(u)] ≤ L·θ·p(u). */
SparseEstimate rand_push(AccessSession& session, PushState init, double theta, Count rounds_L,
                         const EstimatorConfig& cfg);

/** backwards_push at r_max = min(1/2, sqrt(d(t)·δ/n)) then rand_push with
 *  L = ⌈log_{1−α}(cδ/2)⌉ and θ = c²δp_f/(4L). */
SparseEstimate hybrid_single_target(AccessSession& session, VertexId t,
                                    const EstimatorConfig& cfg);
PushParams hybrid_params(Count degree_t, Count n, const EstimatorConfig& cfg);

/** Variant that seeds p(t) = α and residuals only at low-degree neighbors
 *  of t (d ≤ 1/r_max); the skipped high-degree set X shifts the invariant to
 *    π(u,t) = p(u) + Σ_v (r(v) + (1−α)/d(v)·1{v∈X})·π(u,v)
 *  and the reserve bound to π(u,t) − 2·r_max ≤ p(u) ≤ π(u,t). The neighbor
 *  scan uses the sorted prefix when the model allows it. */
PushState backwards_push_avg(AccessSession& session, VertexId t, double r_max,
                             const EstimatorConfig& cfg, const PushObserver& observer = {});

}  // namespace ppr
