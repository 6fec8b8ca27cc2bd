#pragma once

#include <vector>

#include "ppr/graph.hpp"
#include "ppr/types.hpp"

namespace ppr {

struct PprVector {
  enum class Kind { single_source, single_target };
  Kind kind = Kind::single_target;
  VertexId anchor = 0;  // the s or t the vector is relative to
  std::vector<double> values;

  double operator[](VertexId v) const { return values[static_cast<std::size_t>(v)]; }
};

/** x[u] = π(u, t) to within eps. Ground truth; not query-counted. Walks at
 *  isolated vertices terminate in place, so isolated u has x[u] = 1{u=t}. */
PprVector exact_single_target(const Graph& g, const EstimatorConfig& cfg, VertexId t,
                              double eps = 1e-12);

/** x[v] = π(s, v) to within eps; entries sum to 1. */
PprVector exact_single_source(const Graph& g, const EstimatorConfig& cfg, VertexId s,
                              double eps = 1e-12);

/** π(t) = (1/n) Σ_u π(u, t). */
double exact_pagerank(const Graph& g, const EstimatorConfig& cfg, VertexId t,
                      double eps = 1e-12);

/** Independent cross-check: x[u] = Σ_{k=0}^{max_len} α(1−α)^k P[k-step walk
 *  from u is at t]. Off from π(·,t) by at most (1−α)^{max_len+1}. */
PprVector truncated_dp_oracle(const Graph& g, const EstimatorConfig& cfg, VertexId t,
                              Count max_len);

}  // namespace ppr
