#include "ppr/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ppr/exact.hpp"

namespace ppr {

namespace {

constexpr double kTol = 1e-9;      // slack for floored parameters hitting their bound
constexpr double kBaseEps = 1e-9;  // oracle noise allowance for structurally zero values

Count floor_tol(double v) { return static_cast<Count>(std::floor(v + kTol)); }

Count isqrt(Count v) {
  Count r = static_cast<Count>(std::sqrt(static_cast<double>(v)));
  while ((r + 1) * (r + 1) <= v) ++r;
  while (r * r > v) --r;
  return r;
}

struct FamilyNameEntry {
  FamilyId id;
  const char* name;
};

constexpr FamilyNameEntry kFamilyNames[] = {
    {FamilyId::sp_worst, "sp-worst"},     {FamilyId::sp_avg, "sp-avg"},
    {FamilyId::sp_avg_xor, "sp-avg-xor"}, {FamilyId::ss_avg, "ss-avg"},
    {FamilyId::st_wc_a, "st-wc-a"},       {FamilyId::st_wc_js, "st-wc-js"},
    {FamilyId::st_avg_a, "st-avg-a"},     {FamilyId::st_avg_j, "st-avg-j"},
    {FamilyId::st_avg_js, "st-avg-js"},   {FamilyId::sn_worst, "sn-worst"},
    {FamilyId::sn_worst_all, "sn-worst-all"}, {FamilyId::sn_avg, "sn-avg"},
    {FamilyId::sn_avg_all, "sn-avg-all"},
};

const char* swap_violation(const Graph& g, const SwapQuadruple& q) {
  if (!g.has_vertex(q.q1) || !g.has_vertex(q.q2) || !g.has_vertex(q.q3) ||
      !g.has_vertex(q.q4))
    return "a quadruple vertex is out of range";
  if (!g.has_edge(q.q1, q.q2)) return "{q1,q2} is not an edge";
  if (!g.has_edge(q.q3, q.q4)) return "{q3,q4} is not an edge";
  if (q.q1 == q.q3) return "q1 and q3 coincide";
  if (g.has_edge(q.q1, q.q3)) return "{q1,q3} is already an edge";
  if (q.q2 == q.q4) return "q2 and q4 coincide";
  if (g.has_edge(q.q2, q.q4)) return "{q2,q4} is already an edge";
  return nullptr;
}

void check_swappable(const Graph& g, const SwapQuadruple& q) {
  if (const char* why = swap_violation(g, q)) throw SwapError(std::string("swap: ") + why);
}

// Overwrites old_n with new_n in v's list, keeping the slot index.
void replace_neighbor(Graph& g, VertexId v, VertexId old_n, VertexId new_n) {
  auto& lst = g.neigh[static_cast<std::size_t>(v)];
  *std::find(lst.begin(), lst.end(), old_n) = new_n;
}

struct Builder {
  VertexId next = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  VertexRange block(Count size) {
    VertexRange r{next, next + static_cast<VertexId>(size)};
    next = r.hi;
    return r;
  }
  void join(VertexId u, VertexId v) { edges.emplace_back(u, v); }
  void biclique(const VertexRange& a, const VertexRange& b) {
    for (VertexId u = a.lo; u < a.hi; ++u)
      for (VertexId v = b.lo; v < b.hi; ++v) edges.emplace_back(u, v);
  }
  void star_onto(const VertexRange& a, VertexId hub) {
    for (VertexId u = a.lo; u < a.hi; ++u) edges.emplace_back(u, hub);
  }
};

void require(bool ok, const std::string& family, const std::string& constraint) {
  if (!ok) throw GenError(family + ": constraint " + constraint + " violated");
}

// Disjoint circulant padding so the totals reach n vertices and m edges while
// staying within small constant factors of both.
void add_filler(Builder& b, Count n, Count m, SwapFamily& fam) {
  Count gadget_n = b.next;
  Count gadget_m = static_cast<Count>(b.edges.size());
  Count rem_n = std::max<Count>(0, n - gadget_n);
  Count rem_m = std::max<Count>(0, m - gadget_m);
  if (rem_n == 0 && rem_m == 0) return;
  Count nf = std::max<Count>(rem_n, 3);
  while (nf * ((nf - 1) / 2) < rem_m) ++nf;
  Count k = rem_m > 0 ? std::min((rem_m + nf - 1) / nf, (nf - 1) / 2) : 1;
  VertexRange r = b.block(nf);
  Graph c = circulant_graph(static_cast<VertexId>(nf), static_cast<VertexId>(k));
  for (VertexId u = 0; u < c.n; ++u)
    for (VertexId v : c.neigh[static_cast<std::size_t>(u)])
      if (u < v) b.join(r.lo + u, r.lo + v);
  fam.n_filler = nf;
  fam.m_filler = nf * k;
}

OverlapCategory cat(bool is_edge, Count count, bool in_w, bool in_t, bool reserved = false) {
  OverlapCategory c;
  c.is_edge = is_edge;
  c.count = count;
  c.in_w_comps = in_w;
  c.in_target_comp = in_t;
  c.touches_reserved = reserved;
  return c;
}

VertexRange single(VertexId v) { return VertexRange{v, v + 1}; }

void finish(SwapFamily& fam, Builder& b, Count n, Count m) {
  add_filler(b, n, m, fam);
  Count total_n = b.next;
  Count total_m = static_cast<Count>(b.edges.size());
  require(total_n >= n && total_n <= 8 * n, fam.name, "vertex count within [n, 8n]");
  require(total_m >= m && total_m <= 8 * m, fam.name, "edge count within [m, 8m]");
  unsigned __int128 q_total = 0;
  for (const QuadBlock& blk : fam.quadruple_space) {
    unsigned __int128 sz = 1;
    sz *= static_cast<unsigned __int128>(blk.r1.size());
    sz *= static_cast<unsigned __int128>(blk.r2.size());
    sz *= static_cast<unsigned __int128>(blk.r3.size());
    sz *= static_cast<unsigned __int128>(blk.r4.size());
    q_total += sz;
  }
  require(q_total > 0, fam.name, "quadruple space nonempty");
  require(q_total < static_cast<unsigned __int128>(std::numeric_limits<Count>::max() / 2),
          fam.name, "quadruple space indexable");
  fam.base = make_graph(static_cast<VertexId>(total_n), b.edges);
}

double pow1m(double alpha, int k) { return std::pow(1.0 - alpha, k); }

void check_inputs(const std::string& family, Count n, Count m, double delta) {
  require(n >= 4, family, "n >= 4");
  require(n <= m, family, "n <= m");
  require(m <= n * n, family, "m <= n^2");
  require(delta > 0.0 && delta <= 1.0, family, "delta in (0,1]");
}

SwapFamily gen_sp_worst(Count n, Count m, double delta, const EstimatorConfig& cfg) {
  SwapFamily fam;
  fam.id = FamilyId::sp_worst;
  fam.name = "sp-worst";
  double d = static_cast<double>(m) / static_cast<double>(n);
  Count x, y;
  int cs;
  if (delta <= 1.0 / (static_cast<double>(m) * d)) {
    cs = 1, x = (2 * m) / n, y = 2 * n;
  } else if (delta <= 1.0 / static_cast<double>(n)) {
    cs = 2, x = floor_tol(2.0 / std::sqrt(static_cast<double>(n) * delta)), y = 2 * n;
  } else {
    cs = 3, x = 2, y = floor_tol(2.0 / delta);
  }
  require(std::min(x, y) >= 2, fam.name, "min{x,y} >= 2");
  require(std::max(x, y) <= 2 * n, fam.name, "max{x,y} <= 2n");
  require(x * y <= 4 * m, fam.name, "x*y <= 4m");
  require(static_cast<double>(x) * x * y * delta <= 8.0 * (1.0 + kTol), fam.name,
          "x^2*y*delta <= 8");
  fam.params = {x, y, 0, 1, 1, cs};

  Builder b;
  VertexRange A = b.block(x), B = b.block(y), C = b.block(y), D = b.block(x);
  b.biclique(A, B);
  b.biclique(C, D);
  fam.s = A.lo;
  fam.t = D.lo;
  fam.quadruple_space = {QuadBlock{A, B, C, D}};
  fam.model = AccessModel{true, true, true};
  fam.c_bound = pow1m(cfg.alpha, 6) * cfg.alpha / 16.0;
  fam.delta = delta;
  fam.categories = {cat(true, x * y, true, false), cat(true, x * y, true, true),
                    cat(false, x * y, true, false), cat(false, x * y, true, false)};
  finish(fam, b, n, m);
  return fam;
}

// Shared by the sp and ss average-case families, which use the same copied
// two-biclique gadget and differ only in thresholds and per-q roles.
SwapFamily gen_copied_pairs(FamilyId id, Count n, Count m, double delta,
                            const EstimatorConfig& cfg, Count x, Count y, int cs) {
  SwapFamily fam;
  fam.id = id;
  fam.name = family_name(id);
  Count copies = std::max<Count>(1, n / x);
  fam.params = {x, y, 0, copies, 1, cs};

  Builder b;
  VertexRange A0, B0, C0, D0;
  for (Count i = 0; i < copies; ++i) {
    VertexRange A = b.block(x), B = b.block(y), C = b.block(y), D = b.block(x);
    b.biclique(A, B);
    b.biclique(C, D);
    if (i == 0) A0 = A, B0 = B, C0 = C, D0 = D;
  }
  fam.s = A0.lo;
  fam.quadruple_space = {QuadBlock{A0, B0, C0, D0}};
  fam.model = AccessModel{true, true, true};
  fam.delta = delta;
  if (id == FamilyId::ss_avg) {
    fam.target_rule = PairRule::q3;
    fam.c_bound = pow1m(cfg.alpha, 3) * cfg.alpha / 32.0;
    fam.categories = {cat(true, x * y, true, false), cat(true, x * y, false, true),
                      cat(false, x * y, false, false), cat(false, x * y, false, false)};
  } else {
    fam.t = D0.lo;
    fam.c_bound = pow1m(cfg.alpha, 4) * cfg.alpha / 32.0;
    fam.categories = {cat(true, x * y, true, false), cat(true, x * y, true, true),
                      cat(false, x * y, true, false), cat(false, x * y, true, false)};
  }
  finish(fam, b, n, m);
  return fam;
}

SwapFamily gen_sp_avg(Count n, Count m, double delta, const EstimatorConfig& cfg) {
  const char* name = "sp-avg";
  double d = static_cast<double>(m) / static_cast<double>(n);
  Count x, y;
  int cs;
  if (delta <= 1.0 / (static_cast<double>(m) * static_cast<double>(n))) {
    cs = 1, x = 2 * n, y = (2 * m) / n;
  } else if (delta <= 1.0 / (d * d * d)) {
    cs = 2, x = floor_tol(2.0 / std::sqrt(d * delta)), y = (2 * m) / n;
  } else {
    cs = 3, x = y = floor_tol(2.0 * std::cbrt(1.0 / delta));
  }
  require(y >= 2 && y <= x && x <= 2 * n, name, "2 <= y <= x <= 2n");
  require(static_cast<double>(y) <= 2.0 * d * (1.0 + kTol), name, "y <= 2d");
  require(static_cast<double>(x) * x * y * delta <= 8.0 * (1.0 + kTol), name,
          "x^2*y*delta <= 8");
  return gen_copied_pairs(FamilyId::sp_avg, n, m, delta, cfg, x, y, cs);
}

SwapFamily gen_ss_avg(Count n, Count m, double delta, const EstimatorConfig& cfg) {
  const char* name = "ss-avg";
  double d = static_cast<double>(m) / static_cast<double>(n);
  Count x, y;
  int cs;
  if (delta <= 1.0 / static_cast<double>(m)) {
    cs = 1, x = 2 * n, y = (2 * m) / n;
  } else if (delta <= 1.0 / static_cast<double>(n)) {
    cs = 2, x = 2 * n, y = floor_tol(2.0 / (static_cast<double>(n) * delta));
  } else {
    cs = 3, x = floor_tol(2.0 / delta), y = 2;
  }
  require(y >= 2 && y <= x && x <= 2 * n, name, "2 <= y <= x <= 2n");
  require(static_cast<double>(y) <= 2.0 * d * (1.0 + kTol), name, "y <= 2d");
  require(static_cast<double>(x) * y * delta <= 4.0 * (1.0 + kTol), name, "x*y*delta <= 4");
  return gen_copied_pairs(FamilyId::ss_avg, n, m, delta, cfg, x, y, cs);
}

SwapFamily gen_sp_avg_xor(Count n, Count m, double delta, const EstimatorConfig& cfg) {
  SwapFamily fam;
  fam.id = FamilyId::sp_avg_xor;
  fam.name = "sp-avg-xor";
  double d = static_cast<double>(m) / static_cast<double>(n);
  Count x = floor_tol(std::min(d, 1.0 / delta));
  require(x >= 2, fam.name, "x >= 2");
  require(static_cast<double>(x) <= d * (1.0 + kTol), fam.name, "x <= d");
  require(static_cast<double>(x) * delta <= 1.0 + kTol, fam.name, "x*delta <= 1");
  Count copies = std::max<Count>(1, n / x);
  fam.params = {x, x, 0, copies, 1, 0};

  Builder b;
  VertexRange A0, B0, C0, D0;
  for (Count i = 0; i < copies; ++i) {
    VertexRange A = b.block(x), B = b.block(x), C = b.block(x), D = b.block(x);
    b.biclique(A, B);
    b.biclique(C, D);
    if (i == 0) A0 = A, B0 = B, C0 = C, D0 = D;
  }
  VertexRange res = b.block(2);
  fam.reserved = {res.lo, res.lo + 1};
  fam.subdivide = true;
  fam.s = A0.lo;
  fam.t = D0.lo;
  fam.quadruple_space = {QuadBlock{single(*fam.s), B0, single(*fam.t), C0}};
  fam.model = AccessModel{true, false, true};
  fam.c_bound = pow1m(cfg.alpha, 4) * cfg.alpha / 4.0;
  fam.delta = delta;
  fam.categories = {cat(true, x, true, false),
                    cat(true, x, true, true),
                    cat(false, x * x, false, false, true),
                    cat(false, x * x, false, false, true),
                    cat(false, x, false, false, true),
                    cat(false, x, false, false, true)};
  finish(fam, b, n, m);
  return fam;
}

SwapFamily gen_st_wc(FamilyId id, Count n, Count m, double delta,
                     const EstimatorConfig& cfg) {
  SwapFamily fam;
  fam.id = id;
  fam.name = family_name(id);
  double d = static_cast<double>(m) / static_cast<double>(n);
  Count x;
  int cs;
  Builder b;
  if (id == FamilyId::st_wc_a) {
    if (delta <= 1.0 / d) cs = 1, x = m / n;
    else cs = 2, x = floor_tol(1.0 / delta);
    require(x >= 1, fam.name, "x >= 1");
    require(static_cast<double>(x) <= d * (1.0 + kTol), fam.name, "x <= d");
    require(static_cast<double>(x) * delta <= 1.0 + kTol, fam.name, "x*delta <= 1");
    VertexRange A = b.block(1), B = b.block(1), C = b.block(n), D = b.block(x);
    b.biclique(A, B);
    b.biclique(C, D);
    fam.s = B.lo;
    fam.t = D.lo;
    fam.quadruple_space = {QuadBlock{A, B, C, D}};
    fam.model = AccessModel{false, false, true};
    fam.c_bound = pow1m(cfg.alpha, 3) * cfg.alpha / 4.0;
    fam.categories = {cat(true, n * x, false, false), cat(true, 1, true, true),
                      cat(false, x, false, false), cat(false, n, false, false)};
  } else {
    if (delta <= 1.0 / (d * d)) cs = 1, x = m / n;
    else cs = 2, x = floor_tol(1.0 / std::sqrt(delta));
    require(x >= 1, fam.name, "x >= 1");
    require(static_cast<double>(x) <= d * (1.0 + kTol), fam.name, "x <= d");
    require(static_cast<double>(x) * x * delta <= 1.0 + kTol, fam.name, "x^2*delta <= 1");
    VertexRange A = b.block(x), B = b.block(n), C = b.block(n), D = b.block(x);
    b.biclique(A, B);
    b.biclique(C, D);
    fam.source_rule = PairRule::q2;
    fam.t = D.lo;
    fam.quadruple_space = {QuadBlock{A, B, C, D}};
    fam.model = AccessModel{true, true, true};
    fam.c_bound = pow1m(cfg.alpha, 3) * cfg.alpha / 4.0;
    fam.categories = {cat(true, n * x, false, false), cat(true, n * x, true, true),
                      cat(false, n * x, false, false), cat(false, n * x, false, false)};
  }
  fam.params = {x, 0, 0, 1, 1, cs};
  fam.delta = delta;
  finish(fam, b, n, m);
  return fam;
}

SwapFamily gen_st_avg_a(Count n, Count m, double delta, const EstimatorConfig& cfg) {
  SwapFamily fam;
  fam.id = FamilyId::st_avg_a;
  fam.name = "st-avg-a";
  double d = static_cast<double>(m) / static_cast<double>(n);
  Count x, y;
  int cs;
  if (delta <= 1.0 / static_cast<double>(n)) {
    cs = 1, x = 2 * n, y = (2 * m) / n;
  } else if (delta <= 1.0 / d) {
    cs = 2, x = floor_tol(2.0 / delta), y = (2 * m) / n;
  } else {
    cs = 3, x = y = floor_tol(2.0 / delta);
  }
  require(y >= 2 && y <= x && x <= 2 * n, fam.name, "2 <= y <= x <= 2n");
  require(static_cast<double>(y) <= 2.0 * d * (1.0 + kTol), fam.name, "y <= 2d");
  require(static_cast<double>(x) * delta <= 2.0 * (1.0 + kTol), fam.name, "x*delta <= 2");
  Count copies = std::max<Count>(1, n / x);
  fam.params = {x, y, 0, 1, copies, cs};

  Builder b;
  VertexRange A = b.block(1), B = b.block(1);
  b.biclique(A, B);
  VertexRange C0, D0;
  for (Count j = 0; j < copies; ++j) {
    VertexRange C = b.block(y), D = b.block(x);
    b.biclique(C, D);
    if (j == 0) C0 = C, D0 = D;
  }
  fam.s = B.lo;
  fam.t = D0.lo;
  fam.quadruple_space = {QuadBlock{A, B, C0, D0}};
  fam.model = AccessModel{false, false, true};
  fam.c_bound = pow1m(cfg.alpha, 3) * cfg.alpha / 16.0;
  fam.delta = delta;
  fam.categories = {cat(true, x * y, false, false), cat(true, 1, true, true),
                    cat(false, x, false, false), cat(false, y, false, false)};
  finish(fam, b, n, m);
  return fam;
}

SwapFamily gen_st_avg_j(Count n, Count m, double delta, const EstimatorConfig& cfg) {
  SwapFamily fam;
  fam.id = FamilyId::st_avg_j;
  fam.name = "st-avg-j";
  double nd = static_cast<double>(n);
  double d = static_cast<double>(m) / nd;
  double root_n = std::sqrt(nd);
  Count x, y, z;
  int cs;
  if (delta <= 1.0 / static_cast<double>(m)) {
    cs = 1, x = y = (2 * m) / n, z = 2 * n;
  } else if (delta <= std::min(d / nd, nd / (d * d * d))) {
    cs = 2;
    x = floor_tol(std::sqrt(d / (nd * delta)));
    y = (2 * m) / n;
    z = floor_tol(2.0 * std::sqrt(nd / (d * delta)));
  } else if (d <= root_n && delta <= 1.0 / d) {
    cs = 3, x = 1, y = (2 * m) / n, z = floor_tol(2.0 / delta);
  } else if (d > root_n && delta <= 1.0 / root_n) {
    cs = 4;
    x = floor_tol(std::pow(nd, -1.0 / 3.0) * std::pow(delta, -2.0 / 3.0));
    y = z = floor_tol(2.0 * std::pow(nd, 1.0 / 3.0) * std::pow(delta, -1.0 / 3.0));
  } else {
    cs = 5, x = 1, y = z = floor_tol(2.0 / delta);
  }
  require(x >= 1, fam.name, "x >= 1");
  require(y >= 2 && y <= z && z <= 2 * n, fam.name, "2 <= y <= z <= 2n");
  require(static_cast<double>(x) <= 2.0 * d * (1.0 + kTol), fam.name, "x <= 2d");
  require(static_cast<double>(y) <= 2.0 * d * (1.0 + kTol), fam.name, "y <= 2d");
  require(static_cast<double>(x) * z * delta <= 4.0 * (1.0 + kTol), fam.name,
          "x*z*delta <= 4");
  Count k = std::max<Count>(1, n / x), l = std::max<Count>(1, n / z);
  fam.params = {x, y, z, k, l, cs};

  Builder b;
  std::vector<std::pair<VertexRange, VertexRange>> ab(static_cast<std::size_t>(k));
  for (Count i = 0; i < k; ++i) {
    VertexRange A = b.block(x), B = b.block(x);
    b.biclique(A, B);
    ab[static_cast<std::size_t>(i)] = {A, B};
  }
  VertexRange C0, D0;
  for (Count j = 0; j < l; ++j) {
    VertexRange C = b.block(y), D = b.block(z);
    b.biclique(C, D);
    if (j == 0) C0 = C, D0 = D;
  }
  fam.source_rule = PairRule::q2;
  fam.t = D0.lo;
  fam.quadruple_space.reserve(ab.size());
  for (const auto& [A, B] : ab) fam.quadruple_space.push_back(QuadBlock{A, B, C0, D0});
  fam.model = AccessModel{true, false, true};
  fam.c_bound = pow1m(cfg.alpha, 3) * cfg.alpha / 32.0;
  fam.delta = delta;
  fam.categories = {cat(true, y * z, false, false), cat(true, k * x * x, true, true),
                    cat(false, x * z, false, false), cat(false, x * y, false, false)};
  finish(fam, b, n, m);
  return fam;
}

SwapFamily gen_st_avg_js(Count n, Count m, double delta, const EstimatorConfig& cfg) {
  SwapFamily fam;
  fam.id = FamilyId::st_avg_js;
  fam.name = "st-avg-js";
  double d = static_cast<double>(m) / static_cast<double>(n);
  Count x, y;
  int cs;
  if (delta <= 1.0 / static_cast<double>(m)) {
    cs = 1, x = 2 * n, y = (2 * m) / n;
  } else if (delta <= 1.0 / static_cast<double>(n)) {
    cs = 2, x = 2 * n, y = floor_tol(2.0 / (static_cast<double>(n) * delta));
  } else {
    cs = 3, x = floor_tol(2.0 / delta), y = 2;
  }
  require(y >= 2 && y <= x && x <= 2 * n, fam.name, "2 <= y <= x <= 2n");
  require(static_cast<double>(y) <= 2.0 * d * (1.0 + kTol), fam.name, "y <= 2d");
  require(static_cast<double>(x) * y * delta <= 4.0 * (1.0 + kTol), fam.name,
          "x*y*delta <= 4");
  Count copies = std::max<Count>(1, n / x);
  fam.params = {x, y, 0, 1, copies, cs};

  Builder b;
  VertexRange A = b.block(x), B = b.block(y);
  b.biclique(A, B);
  VertexRange C0, D0;
  for (Count j = 0; j < copies; ++j) {
    VertexRange C = b.block(y), D = b.block(x);
    b.biclique(C, D);
    if (j == 0) C0 = C, D0 = D;
  }
  fam.source_rule = PairRule::q1;
  fam.t = D0.lo;
  fam.quadruple_space = {QuadBlock{A, B, C0, D0}};
  fam.model = AccessModel{true, true, true};
  fam.c_bound = pow1m(cfg.alpha, 4) * cfg.alpha / 64.0;
  fam.delta = delta;
  fam.categories = {cat(true, x * y, false, false), cat(true, x * y, true, true),
                    cat(false, x * y, false, false), cat(false, x * y, false, false)};
  finish(fam, b, n, m);
  return fam;
}

SwapFamily gen_sn(FamilyId id, Count n, Count m, double delta, const EstimatorConfig& cfg) {
  SwapFamily fam;
  fam.id = id;
  fam.name = family_name(id);
  Count x, copies;
  switch (id) {
    case FamilyId::sn_worst:
      x = isqrt(m), copies = 1;
      break;
    case FamilyId::sn_worst_all:
      x = isqrt(n), copies = 1;
      break;
    case FamilyId::sn_avg:
      x = m / n, copies = std::max<Count>(1, (n * n) / m);
      break;
    default:
      x = std::min(m / n, isqrt(n)), copies = std::max<Count>(1, (n * n) / m);
      break;
  }
  require(x >= 1, fam.name, "x >= 1");
  require(x * x <= m, fam.name, "x^2 <= m");
  fam.params = {x, 0, 0, 1, copies, 0};

  Builder b;
  VertexRange A = b.block(x), B = b.block(x), C = b.block(x);
  VertexId hub = B.lo;
  b.star_onto(A, hub);
  b.biclique(B, C);
  VertexRange D0, F0;
  for (Count j = 0; j < copies; ++j) {
    VertexRange D = b.block(x), F = b.block(2 * x);
    b.biclique(D, F);
    if (j == 0) D0 = D, F0 = F;
  }
  fam.t = F0.lo;
  fam.quadruple_space = {QuadBlock{single(hub), C, single(*fam.t), D0}};
  bool all = id == FamilyId::sn_worst_all || id == FamilyId::sn_avg_all;
  fam.model = all ? AccessModel{true, true, true} : AccessModel{true, true, false};
  fam.restrict_vw_to_target = all;
  fam.multiplicative = true;
  fam.c_bound = pow1m(cfg.alpha, 2) * cfg.alpha / 84.0;
  fam.delta = delta;
  fam.categories = {cat(true, x, false, false), cat(true, x, true, true),
                    cat(false, x * x, false, false), cat(false, 1, false, false)};
  finish(fam, b, n, m);
  return fam;
}

std::vector<int> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
  int c = 0;
  std::vector<VertexId> stack;
  for (VertexId v0 = 0; v0 < g.n; ++v0) {
    if (comp[static_cast<std::size_t>(v0)] >= 0) continue;
    comp[static_cast<std::size_t>(v0)] = c;
    stack.push_back(v0);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neigh[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  return comp;
}

bool target_rule_fixed(const SwapFamily& fam) {
  return fam.target_rule == PairRule::fixed;
}

// Vertices whose components anchor E_W when the model lacks JUMP.
std::vector<VertexId> w_vertices(const SwapFamily& fam) {
  switch (fam.id) {
    case FamilyId::sp_worst:
    case FamilyId::sp_avg:
    case FamilyId::sp_avg_xor:
      return {*fam.s, *fam.t};
    case FamilyId::ss_avg:
      return {*fam.s};
    default:
      return {*fam.t};
  }
}

}  // namespace

FamilyId parse_family(const std::string& name) {
  for (const auto& e : kFamilyNames)
    if (name == e.name) return e.id;
  throw ParseError("unknown family '" + name + "'");
}

std::string family_name(FamilyId id) {
  for (const auto& e : kFamilyNames)
    if (id == e.id) return e.name;
  throw InvalidIndexError("bad family id");
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& e : kFamilyNames) out.emplace_back(e.name);
  return out;
}

Count SwapFamily::q_size() const {
  Count total = 0;
  for (const QuadBlock& blk : quadruple_space) total += blk.size();
  return total;
}

SwapQuadruple SwapFamily::q_at(Count index) const {
  if (index < 0) throw InvalidIndexError("quadruple index negative");
  for (const QuadBlock& blk : quadruple_space) {
    Count sz = blk.size();
    if (index >= sz) {
      index -= sz;
      continue;
    }
    SwapQuadruple q;
    q.q4 = blk.r4.lo + static_cast<VertexId>(index % blk.r4.size());
    index /= blk.r4.size();
    q.q3 = blk.r3.lo + static_cast<VertexId>(index % blk.r3.size());
    index /= blk.r3.size();
    q.q2 = blk.r2.lo + static_cast<VertexId>(index % blk.r2.size());
    index /= blk.r2.size();
    q.q1 = blk.r1.lo + static_cast<VertexId>(index);
    return q;
  }
  throw InvalidIndexError("quadruple index out of range");
}

SwapQuadruple SwapFamily::sample_q(Rng& rng) const {
  return q_at(static_cast<Count>(rng.below(static_cast<std::uint64_t>(q_size()))));
}

VertexId SwapFamily::source_for(const SwapQuadruple& q) const {
  switch (source_rule) {
    case PairRule::q1: return q.q1;
    case PairRule::q2: return q.q2;
    case PairRule::q3: return q.q3;
    // families without a designated source (the single-node ones) expose
    // their probe vertex as q1
    default: return s ? *s : q.q1;
  }
}

VertexId SwapFamily::target_for(const SwapQuadruple& q) const {
  switch (target_rule) {
    case PairRule::q1: return q.q1;
    case PairRule::q2: return q.q2;
    case PairRule::q3: return q.q3;
    default: return t ? *t : q.q3;
  }
}

bool swappable(const Graph& g, const SwapQuadruple& q) {
  return swap_violation(g, q) == nullptr;
}

Graph apply_swap(const Graph& g, const SwapQuadruple& q) {
  check_swappable(g, q);
  Graph out = g;
  replace_neighbor(out, q.q1, q.q2, q.q3);
  replace_neighbor(out, q.q2, q.q1, q.q4);
  replace_neighbor(out, q.q3, q.q4, q.q1);
  replace_neighbor(out, q.q4, q.q3, q.q2);
  out.finalize();
  return out;
}

Graph subdivide_swap(const Graph& g, const SwapQuadruple& q) {
  check_swappable(g, q);
  VertexId w1 = -1, w2 = -1;
  for (VertexId v = 0; v < g.n && w2 < 0; ++v) {
    if (!g.neigh[static_cast<std::size_t>(v)].empty()) continue;
    (w1 < 0 ? w1 : w2) = v;
  }
  if (w2 < 0) throw GenError("subdivide_swap: graph has fewer than 2 isolated vertices");
  Graph out = g;
  replace_neighbor(out, q.q1, q.q2, w1);
  replace_neighbor(out, q.q3, q.q4, w1);
  out.neigh[static_cast<std::size_t>(w1)] = {q.q1, q.q3};
  replace_neighbor(out, q.q2, q.q1, w2);
  replace_neighbor(out, q.q4, q.q3, w2);
  out.neigh[static_cast<std::size_t>(w2)] = {q.q2, q.q4};
  out.finalize();
  return out;
}

SwapFamily gen_family(FamilyId id, Count n, Count m, double delta,
                      const EstimatorConfig& cfg) {
  check_inputs(family_name(id), n, m, delta);
  switch (id) {
    case FamilyId::sp_worst: return gen_sp_worst(n, m, delta, cfg);
    case FamilyId::sp_avg: return gen_sp_avg(n, m, delta, cfg);
    case FamilyId::sp_avg_xor: return gen_sp_avg_xor(n, m, delta, cfg);
    case FamilyId::ss_avg: return gen_ss_avg(n, m, delta, cfg);
    case FamilyId::st_wc_a:
    case FamilyId::st_wc_js: return gen_st_wc(id, n, m, delta, cfg);
    case FamilyId::st_avg_a: return gen_st_avg_a(n, m, delta, cfg);
    case FamilyId::st_avg_j: return gen_st_avg_j(n, m, delta, cfg);
    case FamilyId::st_avg_js: return gen_st_avg_js(n, m, delta, cfg);
    default: return gen_sn(id, n, m, delta, cfg);
  }
}

SwapFamily gen_family(const std::string& name, Count n, Count m, double delta,
                      const EstimatorConfig& cfg) {
  return gen_family(parse_family(name), n, m, delta, cfg);
}

Count compute_overlap_K(const SwapFamily& fam, const AccessModel& model) {
  Count k = 0;
  for (const OverlapCategory& c : fam.categories) {
    if (c.touches_reserved) continue;
    if (fam.restrict_vw_to_target) {
      if (!c.in_target_comp) continue;
    } else if (!model.jump_enabled && !c.in_w_comps) {
      continue;
    }
    if (!c.is_edge && !model.adj_enabled) continue;
    k = std::max(k, c.count);
  }
  return k;
}

Count brute_force_overlap_K(const SwapFamily& fam, const AccessModel& model) {
  Count qs = fam.q_size();
  if (qs > 100000) throw GenError("brute-force overlap needs |Q| <= 100000");
  const Graph& g = fam.base;
  std::vector<int> comp = components(g);
  std::set<int> w_comps;
  for (VertexId w : w_vertices(fam)) w_comps.insert(comp[static_cast<std::size_t>(w)]);
  int t_comp = fam.t ? comp[static_cast<std::size_t>(*fam.t)] : -1;

  auto in_vw = [&](VertexId v) {
    if (fam.subdivide && (v == fam.reserved[0] || v == fam.reserved[1])) return false;
    if (fam.restrict_vw_to_target) return comp[static_cast<std::size_t>(v)] == t_comp;
    if (model.jump_enabled) return true;
    return w_comps.count(comp[static_cast<std::size_t>(v)]) > 0;
  };

  std::map<std::pair<VertexId, VertexId>, Count> tally;
  auto add = [&](VertexId u, VertexId v) {
    tally[std::minmax(u, v)] += 1;
  };
  for (Count i = 0; i < qs; ++i) {
    SwapQuadruple q = fam.q_at(i);
    add(q.q1, q.q2);
    add(q.q3, q.q4);
    if (fam.subdivide) {
      add(q.q1, fam.reserved[0]);
      add(fam.reserved[0], q.q3);
      add(q.q2, fam.reserved[1]);
      add(fam.reserved[1], q.q4);
    } else {
      add(q.q1, q.q3);
      add(q.q2, q.q4);
    }
  }
  Count k = 0;
  for (const auto& [e, cnt] : tally) {
    if (!in_vw(e.first) || !in_vw(e.second)) continue;
    if (!g.has_edge(e.first, e.second) && !model.adj_enabled) continue;
    k = std::max(k, cnt);
  }
  return k;
}

SeparationReport verify_separation(const SwapFamily& fam, const EstimatorConfig& cfg,
                                   Count samples) {
  double c_eff = std::min(cfg.c, fam.c_bound);
  samples = std::max<Count>(1, samples);
  Rng rng(cfg.seed);
  SeparationReport rep;
  if (fam.multiplicative) {
    rep.pi_base = exact_pagerank(fam.base, cfg, *fam.t);
    rep.threshold = (1.0 + 4.0 * c_eff) * rep.pi_base;
    double lo = std::numeric_limits<double>::infinity();
    for (Count i = 0; i < samples; ++i) {
      Graph gq = apply_swap(fam.base, fam.sample_q(rng));
      lo = std::min(lo, exact_pagerank(gq, cfg, *fam.t));
    }
    rep.pi_swapped_min = lo;
    rep.passed = lo >= rep.threshold;
    return rep;
  }
  // One solve covers the base values of all sampled pairs: whichever endpoint
  // varies per q, the other is fixed.
  PprVector base_vec = target_rule_fixed(fam)
                           ? exact_single_target(fam.base, cfg, *fam.t)
                           : exact_single_source(fam.base, cfg, *fam.s);
  double base_max = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  for (Count i = 0; i < samples; ++i) {
    SwapQuadruple q = fam.sample_q(rng);
    VertexId s_q = fam.source_for(q);
    VertexId t_q = fam.target_for(q);
    base_max = std::max(base_max, base_vec[target_rule_fixed(fam) ? s_q : t_q]);
    Graph gq = fam.subdivide ? subdivide_swap(fam.base, q) : apply_swap(fam.base, q);
    lo = std::min(lo, exact_single_target(gq, cfg, t_q)[s_q]);
  }
  rep.pi_base = base_max;
  rep.pi_swapped_min = lo;
  rep.threshold = 2.0 * c_eff * fam.delta;
  rep.passed = base_max <= kBaseEps && lo > rep.threshold;
  return rep;
}

}  // namespace ppr
