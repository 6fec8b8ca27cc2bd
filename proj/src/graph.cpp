#include "ppr/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace ppr {

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  const auto& a = by_id_[u];
  const auto& b = by_id_[v];
  const auto& shorter = a.size() <= b.size() ? a : b;
  VertexId other = a.size() <= b.size() ? v : u;
  return std::binary_search(shorter.begin(), shorter.end(), other);
}

void Graph::finalize() {
  n = static_cast<VertexId>(neigh.size());
  Count total = 0;
  for (const auto& list : neigh) total += static_cast<Count>(list.size());
  m = total / 2;

  by_id_ = neigh;
  for (auto& list : by_id_) std::sort(list.begin(), list.end());

  neigh_sorted = neigh;
  for (auto& list : neigh_sorted) {
    std::sort(list.begin(), list.end(), [this](VertexId a, VertexId b) {
      Count da = degree(a), db = degree(b);
      return da != db ? da < db : a < b;
    });
  }
}

Graph make_graph(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (n < 0) throw ParseError("vertex count must be nonnegative");
  Graph g;
  g.neigh.resize(static_cast<std::size_t>(n));
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge " + std::to_string(i) + ": vertex out of range");
    if (u == v) throw ParseError("edge " + std::to_string(i) + ": self-loop");
    if (!seen.insert(std::minmax(u, v)).second)
      throw ParseError("edge " + std::to_string(i) + ": duplicate");
    g.neigh[u].push_back(v);
    g.neigh[v].push_back(u);
  }
  g.finalize();
  return g;
}

namespace {

// Strips a trailing comment and returns whether anything is left.
bool strip_line(std::string& line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string line;
  long lineno = 0;
  VertexId n = -1;
  Count m = -1;

  while (std::getline(in, line)) {
    ++lineno;
    if (!strip_line(line)) continue;
    std::istringstream hdr(line);
    long long hn, hm;
    if (!(hdr >> hn >> hm) || hn < 0 || hm < 0)
      throw ParseError("line " + std::to_string(lineno) + ": expected header 'n m'");
    std::string rest;
    if (hdr >> rest)
      throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after header");
    n = static_cast<VertexId>(hn);
    m = static_cast<Count>(hm);
    break;
  }
  if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": missing header 'n m'");

  Graph g;
  g.neigh.resize(static_cast<std::size_t>(n));
  std::set<std::pair<VertexId, VertexId>> dedup;
  Count seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!strip_line(line)) continue;
    if (seen == m)
      throw ParseError("line " + std::to_string(lineno) + ": more than " + std::to_string(m) +
                       " edges");
    std::istringstream row(line);
    long long u, v;
    if (!(row >> u >> v))
      throw ParseError("line " + std::to_string(lineno) + ": expected edge 'u v'");
    std::string rest;
    if (row >> rest)
      throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after edge");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("line " + std::to_string(lineno) + ": vertex out of range [0, " +
                       std::to_string(n) + ")");
    if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
    auto ue = static_cast<VertexId>(u), ve = static_cast<VertexId>(v);
    if (!dedup.insert(std::minmax(ue, ve)).second)
      throw ParseError("line " + std::to_string(lineno) + ": duplicate edge");
    g.neigh[static_cast<std::size_t>(ue)].push_back(ve);
    g.neigh[static_cast<std::size_t>(ve)].push_back(ue);
    ++seen;
  }
  if (seen != m)
    throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(m) +
                     " edges, found " + std::to_string(seen));
  g.finalize();
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_graph(in);
}

void save_graph(const Graph& g, std::ostream& out) {
  out << g.n << ' ' << g.m << '\n';
  // One line per edge, scanning vertices in id order and emitting the u < v
  // copy. Deterministic, though per-vertex neighbor order of a reloaded
  // graph follows this scan rather than the original construction order.
  for (VertexId u = 0; u < g.n; ++u)
    for (VertexId v : g.neigh[static_cast<std::size_t>(u)])
      if (u < v) out << u << ' ' << v << '\n';
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  save_graph(g, out);
}

Graph path_graph(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

Graph cycle_graph(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(n - 1, 0);
  return make_graph(n, e);
}

Graph star_graph(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 1; i < n; ++i) e.emplace_back(0, i);
  return make_graph(n, e);
}

Graph complete_graph(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

Graph complete_bipartite(VertexId a, VertexId b) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < a; ++i)
    for (VertexId j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return make_graph(a + b, e);
}

Graph circulant_graph(VertexId n, VertexId offsets) {
  if (n < 0 || offsets < 0 || (n > 0 && offsets > (n - 1) / 2))
    throw GenError("circulant offsets must satisfy 0 <= k <= (n-1)/2");
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId j = 1; j <= offsets; ++j)
    for (VertexId i = 0; i < n; ++i) e.emplace_back(i, static_cast<VertexId>((i + j) % n));
  // offsets <= (n-1)/2 means no duplicate pairs, so no dedup needed
  return make_graph(n, e);
}

Graph gnm_graph(VertexId n, Count m, Rng& rng) {
  const Count max_m = static_cast<Count>(n) * (n - 1) / 2;
  if (m < 0 || m > max_m) throw GenError("gnm: m out of range for n");
  std::set<std::pair<VertexId, VertexId>> chosen;
  std::vector<std::pair<VertexId, VertexId>> e;
  while (static_cast<Count>(e.size()) < m) {
    auto u = static_cast<VertexId>(rng.below(n));
    auto v = static_cast<VertexId>(rng.below(n));
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (chosen.insert(key).second) e.emplace_back(u, v);
  }
  return make_graph(n, e);
}

}  // namespace ppr
