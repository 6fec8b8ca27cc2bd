#pragma once

#include <string>

#include "ppr/graph.hpp"
#include "ppr/rng.hpp"
#include "ppr/types.hpp"

namespace ppr {

/** Which optional queries the oracle answers. Degree and indexed-neighbor
 *  lookups are always available. */
struct AccessModel {
  bool jump_enabled = false;
  bool sorted_enabled = false;
  bool adj_enabled = false;
};

/** "jump+sorted+adj", "base" when nothing optional is on. */
std::string model_flags_string(const AccessModel& model);
/** Inverse of the above; accepts comma or plus separated names. */
AccessModel parse_model_flags(const std::string& text);

struct QueryCounters {
  Count deg = 0;
  Count neigh = 0;
  Count neigh_sorted = 0;
  Count jump = 0;
  Count adj = 0;
  Count total() const { return deg + neigh + neigh_sorted + jump + adj; }
};

/** Single estimator run's view of the graph: every lookup goes through here,
 *  costs one counter tick, and is checked against the model. The vertex
 *  count n is known for free. Not shareable across concurrent runs. */
class AccessSession {
 public:
  AccessSession(const Graph& g, AccessModel model, std::uint64_t seed)
      : g_(&g), model_(model), rng_(seed) {}
  AccessSession(const Graph& g, AccessModel model, Rng rng)
      : g_(&g), model_(model), rng_(rng) {}

  Count deg(VertexId v);
  VertexId neigh(VertexId v, Count i);         // i is 1-based
  VertexId neigh_sorted(VertexId v, Count i);  // i is 1-based
  VertexId jump();
  bool adj(VertexId u, VertexId v);

  VertexId n() const { return g_->n; }
  const Graph& graph() const { return *g_; }
  const AccessModel& model() const { return model_; }
  const QueryCounters& counters() const { return counters_; }
  void reset_counters() { counters_ = QueryCounters{}; }
  Rng& rng() { return rng_; }

 private:
  void check_vertex(VertexId v, const char* op) const;

  const Graph* g_;
  AccessModel model_;
  QueryCounters counters_;
  Rng rng_;
};

}  // namespace ppr
