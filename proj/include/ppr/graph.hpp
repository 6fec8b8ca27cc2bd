#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ppr/rng.hpp"
#include "ppr/types.hpp"

namespace ppr {

/** Simple undirected graph. Adjacency lists keep edge insertion order, which
 *  is the order indexed neighbor queries expose. finalize() derives the
 *  degree-sorted lists and the membership index; call it after any direct
 *  edit of neigh. */
struct Graph {
  VertexId n = 0;
  Count m = 0;
  std::vector<std::vector<VertexId>> neigh;
  std::vector<std::vector<VertexId>> neigh_sorted;  // (degree asc, id asc)

  Count degree(VertexId v) const { return static_cast<Count>(neigh[v].size()); }
  double avg_degree() const { return n > 0 ? static_cast<double>(m) / n : 0.0; }
  bool has_vertex(VertexId v) const { return v >= 0 && v < n; }
  bool has_edge(VertexId u, VertexId v) const;

  void finalize();

 private:
  std::vector<std::vector<VertexId>> by_id_;  // sorted copies for has_edge
};

Graph make_graph(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges);

/** Text format: first line "n m", then m lines "u v". '#' starts a comment.
 *  Line order defines neighbor order. Throws ParseError naming the line. */
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void save_graph(const Graph& g, std::ostream& out);
void save_graph_file(const Graph& g, const std::string& path);

Graph path_graph(VertexId n);
Graph cycle_graph(VertexId n);
/** Vertex 0 is the hub. */
Graph star_graph(VertexId n);
Graph complete_graph(VertexId n);
/** Parts [0,a) and [a,a+b). */
Graph complete_bipartite(VertexId a, VertexId b);
/** Vertex i links to i+1..i+offsets (mod n); offsets <= (n-1)/2 keeps it simple. */
Graph circulant_graph(VertexId n, VertexId offsets);
/** Uniform simple graph with exactly m distinct edges. */
Graph gnm_graph(VertexId n, Count m, Rng& rng);

}  // namespace ppr
