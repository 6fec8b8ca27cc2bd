#pragma once

#include "ppr/access.hpp"
#include "ppr/types.hpp"

namespace ppr {

struct WalkOutcome {
  VertexId endpoint = 0;
  Count steps = 0;
};

/** Alpha-discounted walk: flip the stop coin, otherwise move to a uniform
 *  neighbor. Endpoint is distributed as π(start, ·). Costs 2 queries per
 *  step taken (deg + neigh); an isolated start returns immediately. */
WalkOutcome random_walk(AccessSession& session, VertexId start, double alpha);

/** Walks per unit 1/δ. The concentration argument is Chebyshev on a
 *  Bernoulli mean, which this constant covers with room at the default
 *  c = p_f = 0.1. */
inline double kappa_mc(const EstimatorConfig& cfg) { return 3.0 / (cfg.c * cfg.c * cfg.p_f); }

/** ⌈κ_mc / δ⌉ forward walks from s; π̂(s,u) = endpoint frequency. */
SparseEstimate mc_single_source(AccessSession& session, VertexId s, const EstimatorConfig& cfg);
Count mc_walk_count(const EstimatorConfig& cfg);

/** ⌈κ_mc·d(t)/δ⌉ walks from t; π̂(u,t) = frequency(u)·d(t)/d(u) by
 *  reversibility. Isolated t yields {t: 1}. */
SparseEstimate bmc_single_target(AccessSession& session, VertexId t, const EstimatorConfig& cfg);
Count bmc_walk_count(Count degree_t, const EstimatorConfig& cfg);

/** π̂(t) = (1/(nW))·Σ_walks d(t)/d(endpoint), walks started at t. Unbiased
 *  for π(t); isolated t gives exactly 1/n. */
double bmc_single_node(AccessSession& session, VertexId t, const EstimatorConfig& cfg);
Count bmc_node_walk_count(Count degree_t, const EstimatorConfig& cfg);

}  // namespace ppr
