#pragma once

#include "ppr/access.hpp"
#include "ppr/push.hpp"
#include "ppr/types.hpp"

namespace ppr {

struct SingleNodeParams {
  Count tau = 1;
  Count w_L = 0;
  Count w_H = 0;
};

struct BiPprParams {
  double r_max = 0.0;
  Count n_r = 1;
};

enum class StVariant { worst, avg };

SingleNodeParams single_node_params(Count n, Count degree_t, const EstimatorConfig& cfg);

/** Length of the longest prefix of neigh_sorted(t) whose degrees are <= tau,
 *  found by binary search (O(log d(t)) queries). */
Count sorted_prefix_leq(AccessSession& session, VertexId t, double tau);

/** Single-vertex PageRank estimate using JUMP, NEIGH-SORTED and ADJ.
 *  Splits N(t) at degree τ by binary search over the sorted list, samples
 *  walks from the low-degree side directly and reaches the high-degree side
 *  through jump-started walks filtered by adj. Unbiased; relative-error
 *  contract at failure probability p_f. Isolated t returns exactly 1/n. */
double single_node(AccessSession& session, VertexId t, const EstimatorConfig& cfg);

BiPprParams bippr_params(const EstimatorConfig& cfg);

/** Pair estimate π̂(s,t) = p(s) + mean over n_r walk endpoints of the
 *  corrected residual. Eager mode folds the high-degree-neighbor correction
 *  into the residual table by scanning N(t); lazy mode instead tests each
 *  walk endpoint with deg/adj, requiring NEIGH-SORTED and ADJ. Both modes
 *  produce identical estimates for the same seed. */
double bippr_avg_pair(AccessSession& session, VertexId s, VertexId t, const EstimatorConfig& cfg,
                      bool lazy = false);

/** Bidirectional single-target table built from jump-started walks.
 *  worst: backwards_push at r_max = min(1/2, sqrt(δ·d(t)/n));
 *  avg:   backwards_push_avg at r_max = min(1/2, (δ/n)^{1/3}) with the
 *         residual correction applied eagerly.
 *  π̂(u,t) = p(u) + average residual at endpoints of walks started at u,
 *  or p(u) alone when no walk started there. Contract holds per vertex
 *  with π(u,t) > δ. */
SparseEstimate jump_bidirectional_st(AccessSession& session, VertexId t,
                                     const EstimatorConfig& cfg, StVariant variant);
double jump_st_r_max(Count degree_t, Count n, const EstimatorConfig& cfg, StVariant variant);

}  // namespace ppr
