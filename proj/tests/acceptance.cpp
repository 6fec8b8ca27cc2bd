// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
// Every tolerance is pinned here, next to the check it guards.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ppr/access.hpp"
#include "ppr/bench.hpp"
#include "ppr/bidirectional.hpp"
#include "ppr/exact.hpp"
#include "ppr/graph.hpp"
#include "ppr/instances.hpp"
#include "ppr/push.hpp"
#include "ppr/rng.hpp"
#include "ppr/types.hpp"
#include "ppr/walk.hpp"

namespace {

using namespace ppr;

const AccessModel kAllQueries{true, true, true};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

void note(Outcome& o, const std::string& text) {
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += text;
}

void expect(Outcome& o, bool ok, const std::string& why) {
  if (ok) return;
  o.pass = false;
  note(o, why);
}

double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

double take(const SparseEstimate& est, VertexId v) {
  auto it = est.find(v);
  return it == est.end() ? 0.0 : it->second;
}

// cols[w][u] = pi(u, w)
std::vector<std::vector<double>> target_columns(const Graph& g, const EstimatorConfig& cfg) {
  std::vector<std::vector<double>> cols;
  cols.reserve(static_cast<std::size_t>(g.n));
  for (VertexId w = 0; w < g.n; ++w) cols.push_back(exact_single_target(g, cfg, w).values);
  return cols;
}

// Worst deviation of pi(u,t) = p(u) + sum_w (r(w) + extra(w)) pi(u,w) over u.
double invariant_gap(const Graph& g, const std::vector<std::vector<double>>& cols, VertexId t,
                     const PushState& st, const std::map<VertexId, double>& extra) {
  double worst = 0.0;
  for (VertexId u = 0; u < g.n; ++u) {
    double sum = 0.0;
    for (const auto& [w, rw] : st.r) sum += rw * cols[static_cast<std::size_t>(w)][u];
    for (const auto& [w, ew] : extra) sum += ew * cols[static_cast<std::size_t>(w)][u];
    const double dev = cols[static_cast<std::size_t>(t)][u] - st.reserve(u) - sum;
    worst = std::max(worst, std::fabs(dev));
  }
  return worst;
}

// ---------------------------------------------------------------- criterion 1

Outcome c1_oracles_agree() {
  Outcome o;
  const double t0 = now_s();
  EstimatorConfig cfg;
  std::vector<Graph> corpus;
  for (int k = 0; k < 10; ++k) corpus.push_back(path_graph(3 + 5 * k));
  for (int k = 0; k < 10; ++k) corpus.push_back(star_graph(2 + 5 * k));
  for (int k = 0; k < 10; ++k) corpus.push_back(complete_graph(2 + k));
  for (int k = 0; k < 10; ++k)
    corpus.push_back(complete_bipartite(1 + k / 2, 1 + (k + 1) / 2));
  Rng rng(2026);
  for (int k = 0; k < 10; ++k) {
    const VertexId n = 10 + 4 * k;
    const Count cap = static_cast<Count>(n) * (n - 1) / 2;
    corpus.push_back(gnm_graph(n, std::min<Count>(2 * n, cap), rng));
  }
  expect(o, corpus.size() == 50, "corpus size");

  // truncation at 124 steps leaves at most 0.8^125 ~ 7e-13 unaccounted
  const Count len = 124;
  double worst = 0.0;
  for (const Graph& g : corpus) {
    for (VertexId t : {VertexId{0}, static_cast<VertexId>(g.n / 2)}) {
      PprVector a = exact_single_target(g, cfg, t);
      PprVector b = truncated_dp_oracle(g, cfg, t, len);
      for (VertexId u = 0; u < g.n; ++u) worst = std::max(worst, std::fabs(a[u] - b[u]));
    }
  }
  const double dt = now_s() - t0;
  note(o, fmt("50 graphs, max dev %.2e, %.1fs", worst, dt));
  expect(o, worst <= 1e-10, "dev over 1e-10");
  expect(o, dt < 10.0, "over the 10s budget");
  return o;
}

// ---------------------------------------------------------------- criterion 2

Outcome c2_pair_symmetry() {
  Outcome o;
  EstimatorConfig cfg;
  Rng rng(4242);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const VertexId n = static_cast<VertexId>(20 + 4 * k);
    const Count cap = static_cast<Count>(n) * (n - 1) / 2;
    const Count m = std::min<Count>(cap, n + static_cast<Count>(k) * n / 4);
    Graph g = gnm_graph(n, m, rng);
    auto cols = target_columns(g, cfg);
    for (VertexId u = 0; u < n; ++u) {
      const double du = static_cast<double>(g.degree(u));
      for (VertexId v = 0; v < n; ++v) {
        const double dv = static_cast<double>(g.degree(v));
        const double dev = du * cols[static_cast<std::size_t>(v)][u] -
                           dv * cols[static_cast<std::size_t>(u)][v];
        worst = std::max(worst, std::fabs(dev));
      }
    }
  }
  note(o, fmt("20 graphs, max |d(u)pi(u,v) - d(v)pi(v,u)| = %.2e", worst));
  expect(o, worst <= 1e-9, "asymmetry over 1e-9");
  return o;
}

// ------------------------------------------------------------ criteria 3 and 4

std::vector<Graph> push_corpus() {
  std::vector<Graph> corpus = {complete_graph(2),    complete_graph(3), path_graph(5),
                               star_graph(6),        cycle_graph(7),    complete_bipartite(3, 3)};
  Rng rng(77);
  corpus.push_back(gnm_graph(12, 20, rng));
  corpus.push_back(gnm_graph(20, 40, rng));
  return corpus;
}

Outcome c3_push_invariant() {
  Outcome o;
  EstimatorConfig cfg;
  double worst_inv = 0.0, worst_band = 0.0;
  Count pushes = 0;
  for (const Graph& g : push_corpus()) {
    auto cols = target_columns(g, cfg);
    for (VertexId t : {VertexId{0}, static_cast<VertexId>(g.n - 1)}) {
      for (double r_max : {0.5, 0.1, 0.02}) {
        AccessSession ses(g, kAllQueries, 1);
        PushObserver obs = [&](const PushState& st) {
          ++pushes;
          worst_inv = std::max(worst_inv, invariant_gap(g, cols, t, st, {}));
        };
        PushState fin = backwards_push(ses, t, r_max, cfg, obs);
        for (VertexId u = 0; u < g.n; ++u) {
          const double gap = cols[static_cast<std::size_t>(t)][u] - fin.reserve(u);
          worst_band = std::max(worst_band, std::max(-gap, gap - r_max));
        }
      }
    }
  }
  note(o, fmt("%lld pushes, worst invariant dev %.2e, band excess %.2e",
              static_cast<long long>(pushes), worst_inv, worst_band));
  expect(o, pushes > 100, "too few pushes observed");
  expect(o, worst_inv <= 1e-9, "invariant dev over 1e-9");
  expect(o, worst_band <= 1e-12, "reserve outside [pi - r_max, pi]");
  return o;
}

Outcome c4_push_avg_invariant() {
  Outcome o;
  EstimatorConfig cfg;
  double worst_inv = 0.0, worst_band = 0.0;
  Count pushes = 0, with_exclusions = 0;
  for (const Graph& g : push_corpus()) {
    auto cols = target_columns(g, cfg);
    for (VertexId t : {VertexId{0}, static_cast<VertexId>(g.n - 1)}) {
      for (double r_max : {0.5, 0.1, 0.02}) {
        // the skipped high-degree neighbors keep their one-step weight
        std::map<VertexId, double> extra;
        for (Count i = 0; i < g.degree(t); ++i) {
          const VertexId y = g.neigh[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)];
          const double dy = static_cast<double>(g.degree(y));
          if (dy > 1.0 / r_max) extra[y] = (1.0 - cfg.alpha) / dy;
        }
        if (!extra.empty()) ++with_exclusions;
        AccessSession ses(g, kAllQueries, 1);
        PushObserver obs = [&](const PushState& st) {
          ++pushes;
          worst_inv = std::max(worst_inv, invariant_gap(g, cols, t, st, extra));
        };
        PushState fin = backwards_push_avg(ses, t, r_max, cfg, obs);
        for (VertexId u = 0; u < g.n; ++u) {
          const double gap = cols[static_cast<std::size_t>(t)][u] - fin.reserve(u);
          worst_band = std::max(worst_band, std::max(-gap, gap - 2.0 * r_max));
        }
      }
    }
  }
  note(o, fmt("%lld pushes, %lld runs with skipped neighbors, worst dev %.2e, band excess %.2e",
              static_cast<long long>(pushes), static_cast<long long>(with_exclusions), worst_inv,
              worst_band));
  expect(o, with_exclusions > 0, "no run exercised the skipped-neighbor set");
  expect(o, worst_inv <= 1e-9, "modified invariant dev over 1e-9");
  expect(o, worst_band <= 1e-12, "reserve outside [pi - 2 r_max, pi]");
  return o;
}

// ---------------------------------------------------------------- criterion 5

Outcome c5_power_residual_decay() {
  Outcome o;
  EstimatorConfig cfg;
  std::vector<Graph> corpus = {complete_graph(3), path_graph(6), star_graph(8),
                               complete_bipartite(3, 4)};
  Rng rng(9);
  corpus.push_back(gnm_graph(16, 32, rng));
  double worst_excess = 0.0;
  for (const Graph& g : corpus) {
    for (Count L = 0; L <= 40; ++L) {
      AccessSession ses(g, kAllQueries, 1);
      PushState st = power_method_target(ses, 0, L, cfg);
      double max_r = 0.0;
      for (const auto& [v, rv] : st.r) max_r = std::max(max_r, rv);
      worst_excess = std::max(worst_excess, max_r / std::pow(1.0 - cfg.alpha, L) - 1.0);
    }
  }
  note(o, fmt("5 graphs, L in [0,40], worst max_r/0.8^L - 1 = %.2e", worst_excess));
  expect(o, worst_excess <= 1e-12, "residual above (1-alpha)^L");
  return o;
}

// ---------------------------------------------------------------- criterion 6

Outcome c6_rand_push_stats() {
  Outcome o;
  const double t0 = now_s();
  EstimatorConfig cfg;
  const double theta = 0.05;
  const Count L = 20;
  const int runs = 5000;

  Rng gr(5);
  Graph g16 = gnm_graph(16, 40, gr);
  Graph k3 = complete_graph(3);
  double worst_z = 0.0, worst_ratio = 0.0;
  for (const Graph* gp : {&k3, &g16}) {
    const Graph& g = *gp;
    const VertexId t = 0;
    AccessSession pses(g, kAllQueries, 1);
    PushState ref = power_method_target(pses, t, L, cfg);
    std::vector<double> sum(static_cast<std::size_t>(g.n), 0.0);
    std::vector<double> sumsq(static_cast<std::size_t>(g.n), 0.0);
    for (int r = 0; r < runs; ++r) {
      AccessSession ses(g, kAllQueries, 9000 + static_cast<std::uint64_t>(r));
      PushState init;
      init.r[t] = 1.0;
      SparseEstimate est = rand_push(ses, std::move(init), theta, L, cfg);
      for (const auto& [v, e] : est) {
        sum[static_cast<std::size_t>(v)] += e;
        sumsq[static_cast<std::size_t>(v)] += e * e;
      }
    }
    for (const auto& [v, p] : ref.p) {
      if (p <= 0.0) continue;
      const double mean = sum[static_cast<std::size_t>(v)] / runs;
      const double var = sumsq[static_cast<std::size_t>(v)] / runs - mean * mean;
      const double se = std::sqrt(std::max(var, 0.0) / runs);
      worst_z = std::max(worst_z, std::fabs(mean - p) / (se + 1e-12));
      worst_ratio = std::max(worst_ratio, var / (static_cast<double>(L) * theta * p));
    }
  }
  const double dt = now_s() - t0;
  note(o, fmt("worst |mean-p|/SE %.2f (limit 4), worst var/(L theta p) %.3f (limit 1.5), %.1fs",
              worst_z, worst_ratio, dt));
  expect(o, worst_z <= 4.0, "mean off by more than 4 SE");
  expect(o, worst_ratio <= 1.5, "variance above 1.5 L theta p");
  expect(o, dt < 60.0, "over the 60s budget");
  return o;
}

// ---------------------------------------------------------------- criterion 7

Outcome c7_error_contract() {
  Outcome o;
  EstimatorConfig cfg;  // the contract is checked at the default c and p_f
  std::vector<Graph> graphs;
  Rng gr(97);
  for (int i = 0; i < 10; ++i) {
    const Count n = 16 + 16 * (i % 4);
    const Count m = 2 * n + (i % 3) * n / 2;
    graphs.push_back(gnm_graph(static_cast<VertexId>(n), m, gr));
  }
  struct Pair {
    VertexId s, t;
  };
  std::vector<Pair> pairs;
  std::vector<std::vector<double>> exact_t;
  std::vector<double> exact_node;
  Rng pick(41);
  for (const Graph& g : graphs) {
    VertexId t = static_cast<VertexId>(pick.below(g.n));
    VertexId s = static_cast<VertexId>(pick.below(g.n));
    if (s == t) s = (s + 1) % g.n;
    pairs.push_back({s, t});
    exact_t.push_back(exact_single_target(g, cfg, t).values);
    exact_node.push_back(exact_pagerank(g, cfg, t));
  }

  using Run = std::function<double(AccessSession&, const Pair&, const EstimatorConfig&)>;
  struct Entry {
    const char* name;
    bool node;
    Run run;
  };
  const std::vector<Entry> entries = {
      {"mc", false,
       [](AccessSession& s, const Pair& d, const EstimatorConfig& c) {
         return take(mc_single_source(s, d.s, c), d.t);
       }},
      {"bmc", false,
       [](AccessSession& s, const Pair& d, const EstimatorConfig& c) {
         return take(bmc_single_target(s, d.t, c), d.s);
       }},
      {"hybrid", false,
       [](AccessSession& s, const Pair& d, const EstimatorConfig& c) {
         return take(hybrid_single_target(s, d.t, c), d.s);
       }},
      {"bp-avg", false,
       [](AccessSession& s, const Pair& d, const EstimatorConfig& c) {
         return backwards_push_avg(s, d.t, c.c * c.delta / 2.0, c).reserve(d.s);
       }},
      {"bippr-avg", false,
       [](AccessSession& s, const Pair& d, const EstimatorConfig& c) {
         return bippr_avg_pair(s, d.s, d.t, c, false);
       }},
      {"jump-st", false,
       [](AccessSession& s, const Pair& d, const EstimatorConfig& c) {
         return take(jump_bidirectional_st(s, d.t, c, StVariant::worst), d.s);
       }},
      {"single-node", true,
       [](AccessSession& s, const Pair& d, const EstimatorConfig& c) {
         return single_node(s, d.t, c);
       }},
  };

  int worst_viol = 0;
  const char* worst_name = "";
  for (const Entry& e : entries) {
    int viol = 0, total = 0;
    int di = 0;
    for (double delta : {0.2, 0.05}) {
      EstimatorConfig c = cfg;
      c.delta = delta;
      for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const double ex = e.node ? exact_node[gi] : exact_t[gi][pairs[gi].s];
        for (int trial = 0; trial < 10; ++trial) {
          AccessSession ses(graphs[gi], kAllQueries,
                            7000 + 50000 * static_cast<std::uint64_t>(di) + 131 * gi +
                                static_cast<std::uint64_t>(trial));
          const double est = e.run(ses, pairs[gi], c);
          if (std::fabs(est - ex) >= c.c * std::max(ex, c.delta)) ++viol;
          ++total;
        }
      }
      ++di;
    }
    expect(o, total == 200, fmt("%s: expected 200 runs", e.name));
    // allowed rate is p_f + 0.05 = 0.15, i.e. 30 of 200
    expect(o, viol <= 30, fmt("%s: %d/200 violations", e.name, viol));
    if (viol >= worst_viol) {
      worst_viol = viol;
      worst_name = e.name;
    }
  }
  note(o, fmt("7 estimators x 200 runs, worst rate %d/200 (%s), limit 30", worst_viol,
              worst_name));
  return o;
}

// ---------------------------------------------------------------- criterion 8

Outcome c8_single_node_stats() {
  Outcome o;
  EstimatorConfig cfg;
  // loose constants keep the 5000-run fixtures fast; the mean and variance
  // guarantees hold for any parameter choice
  cfg.c = 0.45;
  cfg.p_f = 0.45;
  const int runs = 5000;

  Rng gr(5);
  Graph g32 = gnm_graph(32, 96, gr);
  VertexId t32 = 0;
  for (VertexId v = 0; v < g32.n; ++v)
    if (g32.degree(v) > g32.degree(t32)) t32 = v;
  Graph k5 = complete_graph(5);

  struct Case {
    const Graph* g;
    VertexId t;
    const char* name;
  };
  for (const Case& cs : {Case{&k5, 0, "K5"}, Case{&g32, t32, "gnm(32,96)"}}) {
    const Graph& g = *cs.g;
    const double root_n = std::sqrt(static_cast<double>(g.n));
    expect(o, static_cast<double>(g.degree(cs.t)) > root_n,
           fmt("%s: d(t) must exceed sqrt(n)", cs.name));
    const SingleNodeParams prm = single_node_params(g.n, g.degree(cs.t), cfg);
    AccessSession probe(g, kAllQueries, 1);
    const Count x_low = sorted_prefix_leq(probe, cs.t, static_cast<double>(prm.tau));
    if (g.n == 5) {
      expect(o, x_low == 0, "K5 should have no low-degree neighbors");
    } else {
      expect(o, x_low > 0 && x_low < g.degree(cs.t),
             fmt("%s: wanted both neighbor classes", cs.name));
    }

    const double pr = exact_pagerank(g, cfg, cs.t);
    double s = 0.0, s2 = 0.0;
    for (int r = 0; r < runs; ++r) {
      AccessSession ses(g, kAllQueries, 11000 + static_cast<std::uint64_t>(r));
      const double e = single_node(ses, cs.t, cfg);
      s += e;
      s2 += e * e;
    }
    const double mean = s / runs;
    const double var = s2 / runs - mean * mean;
    const double se = std::sqrt(std::max(var, 0.0) / runs);
    const double bound =
        (1.0 - cfg.alpha) * pr *
        (static_cast<double>(x_low) / (static_cast<double>(g.n) * static_cast<double>(prm.w_L)) +
         1.0 / (static_cast<double>(prm.w_H) * static_cast<double>(prm.tau)));
    const double z = std::fabs(mean - pr) / (se + 1e-15);
    note(o, fmt("%s: |mean-pi|/SE %.2f, var/bound %.3f", cs.name, z, var / bound));
    expect(o, z <= 4.0, fmt("%s: mean off by more than 4 SE", cs.name));
    expect(o, var <= 1.5 * bound, fmt("%s: variance above 1.5x bound", cs.name));
  }
  return o;
}

// ---------------------------------------------------------------- criterion 9

Outcome c9_families_separate() {
  Outcome o;
  struct Row {
    const char* name;
    Count n, m;
    double delta;
  };
  const Row rows[] = {
      {"sp-worst", 60, 120, 0.05},  {"sp-avg", 64, 256, 0.1},    {"sp-avg-xor", 64, 256, 0.1},
      {"ss-avg", 64, 256, 0.1},     {"st-avg-a", 64, 256, 0.1},  {"st-avg-j", 64, 256, 0.1},
      {"st-avg-js", 64, 256, 0.1},  {"st-wc-a", 40, 80, 0.2},    {"st-wc-js", 40, 80, 0.2},
      {"sn-worst", 100, 400, 0.04}, {"sn-worst-all", 100, 400, 0.04},
      {"sn-avg", 100, 400, 0.04},   {"sn-avg-all", 100, 400, 0.04},
  };
  int families = 0;
  for (const Row& row : rows) {
    EstimatorConfig cfg;
    cfg.delta = row.delta;
    SwapFamily fam = gen_family(row.name, row.n, row.m, row.delta, cfg);
    SeparationReport rep = verify_separation(fam, cfg, 20);
    expect(o, rep.passed, fmt("%s: separation failed (base %.2e, min swapped %.2e, thr %.2e)",
                              row.name, rep.pi_base, rep.pi_swapped_min, rep.threshold));
    const Count closed = compute_overlap_K(fam, fam.model);
    const Count brute = brute_force_overlap_K(fam, fam.model);
    expect(o, closed == brute, fmt("%s: overlap %lld != brute %lld", row.name,
                                   static_cast<long long>(closed),
                                   static_cast<long long>(brute)));
    if (std::string(row.name) == "sp-worst") {
      expect(o, rep.pi_base <= 1e-12, "sp-worst: base pair value must be zero");
      expect(o, closed == fam.params.x * fam.params.y, "sp-worst: overlap != x*y");
    }
    if (std::string(row.name) == "st-wc-a")
      expect(o, closed == 1, "st-wc-a: overlap != 1");
    ++families;
  }
  note(o, fmt("%d families, 20 sampled swaps each, overlap closed == brute", families));
  return o;
}

// --------------------------------------------------------------- criterion 10

double mean_queries(const Graph& g, AccessModel model, std::uint64_t seed0, int trials,
                    const std::function<void(AccessSession&)>& run) {
  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    AccessSession ses(g, model, seed0 + static_cast<std::uint64_t>(t));
    run(ses);
    total += static_cast<double>(ses.counters().total());
  }
  return total / trials;
}

Outcome c10_scaling_exponents() {
  Outcome o;
  const int trials = 10;
  const double tol = 0.15;
  struct Sweep {
    const char* name;
    double target;
    double slope;
    double seconds;
  };
  std::vector<Sweep> sweeps;

  // loose constants shrink the walk budgets without touching the exponents
  {
    const double t0 = now_s();
    EstimatorConfig cfg;
    cfg.c = 0.45;
    cfg.p_f = 0.45;
    cfg.delta = 0.04;
    std::vector<double> xs, ys;
    for (int e = 10; e <= 16; ++e) {
      const Count m = Count{1} << e;
      SwapFamily fam = gen_family(FamilyId::sn_worst, m / 4, m, 0.004, cfg);
      const VertexId t = *fam.t;
      xs.push_back(static_cast<double>(m));
      ys.push_back(mean_queries(fam.base, fam.model, 100 * static_cast<std::uint64_t>(e), trials,
                                [&](AccessSession& s) { bmc_single_node(s, t, cfg); }));
    }
    sweeps.push_back({"node walks vs m", 0.5, fit_loglog(xs, ys).slope, now_s() - t0});
  }
  {
    const double t0 = now_s();
    EstimatorConfig cfg;
    cfg.c = 0.45;
    cfg.p_f = 0.45;
    cfg.delta = 0.04;
    std::vector<double> xs, ys;
    for (int e = 10; e <= 16; ++e) {
      const Count n = Count{1} << e;
      SwapFamily fam = gen_family(FamilyId::sn_worst, n, 4 * n, 0.004, cfg);
      const VertexId t = *fam.t;
      expect(o, static_cast<double>(fam.base.degree(t)) > std::sqrt(static_cast<double>(fam.base.n)),
             "single-node sweep needs d(t) > sqrt(n)");
      xs.push_back(static_cast<double>(fam.base.n));
      ys.push_back(mean_queries(fam.base, kAllQueries, 200 * static_cast<std::uint64_t>(e), trials,
                                [&](AccessSession& s) { single_node(s, t, cfg); }));
    }
    sweeps.push_back({"single-node vs n", 0.5, fit_loglog(xs, ys).slope, now_s() - t0});
  }
  {
    const double t0 = now_s();
    EstimatorConfig cfg;
    cfg.c = 0.3;
    cfg.p_f = 0.3;
    Rng gr(7);
    Graph g = gnm_graph(64, 256, gr);
    std::vector<double> xs, ys;
    for (int i = 0; i < 6; ++i) {
      cfg.delta = 0.2 / (1 << i);
      xs.push_back(1.0 / cfg.delta);
      ys.push_back(mean_queries(g, AccessModel{}, 3000 + static_cast<std::uint64_t>(i), trials,
                                [&](AccessSession& s) { mc_single_source(s, 0, cfg); }));
    }
    sweeps.push_back({"walk count vs 1/delta", 1.0, fit_loglog(xs, ys).slope, now_s() - t0});
  }
  {
    // Both phases of the two-phase estimator adapt to the instance: on a graph
    // held fixed across the sweep their query count grows like log(1/delta)
    // (round count L times the support edges), so the fit lands near 0.2, not
    // at the 0.5 the worst-case bound suggests. The 0.5 exponent is real only
    // for instance families sized against 1/delta. Kept as an honest red.
    const double t0 = now_s();
    EstimatorConfig gen_cfg;
    gen_cfg.delta = 0.2;
    SwapFamily fam = gen_family(FamilyId::st_wc_a, 40, 80, 0.2, gen_cfg);
    const VertexId t = *fam.t;
    EstimatorConfig cfg;
    std::vector<double> xs, ys;
    for (int i = 0; i < 6; ++i) {
      cfg.delta = 0.2 / (1 << i);
      xs.push_back(1.0 / cfg.delta);
      ys.push_back(mean_queries(fam.base, kAllQueries, 4000 + static_cast<std::uint64_t>(i),
                                trials,
                                [&](AccessSession& s) { hybrid_single_target(s, t, cfg); }));
    }
    sweeps.push_back({"two-phase vs 1/delta", 0.5, fit_loglog(xs, ys).slope, now_s() - t0});
  }

  for (const Sweep& sw : sweeps) {
    note(o, fmt("%s: slope %.3f (target %.1f +/- %.2f)", sw.name, sw.slope, sw.target, tol));
    expect(o, std::fabs(sw.slope - sw.target) <= tol,
           fmt("%s: slope out of band", sw.name));
    expect(o, sw.seconds < 300.0, fmt("%s: over the 5 minute budget", sw.name));
  }
  return o;
}

// --------------------------------------------------------------- criterion 11

std::string pinned_scenario_csv() {
  EstimatorConfig cfg;
  Rng gr(3);
  Graph g = gnm_graph(32, 64, gr);
  std::vector<ExperimentRecord> recs;
  auto add = [&](const char* algo, double delta, double exact,
                 const std::function<double(AccessSession&, const EstimatorConfig&)>& run) {
    EstimatorConfig c = cfg;
    c.delta = delta;
    for (Count trial = 0; trial < 3; ++trial) {
      AccessSession ses(g, kAllQueries, c.seed + static_cast<std::uint64_t>(trial));
      ExperimentRecord rec;
      rec.estimate = run(ses, c);
      rec.family = "pinned";
      rec.n = g.n;
      rec.m = g.m;
      rec.delta = delta;
      rec.algo = algo;
      rec.model_flags = model_flags_string(kAllQueries);
      rec.trial = trial;
      rec.seed = c.seed + static_cast<std::uint64_t>(trial);
      rec.queries = ses.counters();
      rec.exact = exact;
      rec.wall_ns = 0;
      recs.push_back(rec);
    }
  };
  add("mc", 0.1, exact_single_source(g, cfg, 1)[5],
      [](AccessSession& s, const EstimatorConfig& c) {
        return take(mc_single_source(s, 1, c), 5);
      });
  add("bippr-avg", 0.2, exact_single_target(g, cfg, 7)[2],
      [](AccessSession& s, const EstimatorConfig& c) { return bippr_avg_pair(s, 2, 7, c); });
  add("single-node", 0.1, exact_pagerank(g, cfg, 9),
      [](AccessSession& s, const EstimatorConfig& c) { return single_node(s, 9, c); });
  std::ostringstream out;
  write_csv(out, recs);
  return out.str();
}

Outcome c11_csv_reproducibility() {
  Outcome o;
  const std::string first = pinned_scenario_csv();
  const std::string second = pinned_scenario_csv();
  const long long rows =
      static_cast<long long>(std::count(first.begin(), first.end(), '\n')) - 1;
  note(o, fmt("%lld rows", rows));
  expect(o, rows == 9, "expected 9 rows");
  expect(o, first.rfind(csv_header(), 0) == 0, "missing header");
  expect(o, first == second, "reruns differ");
  return o;
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* label;
    Outcome (*fn)();
  };
  const Row rows[] = {
      {1, "dense solves match truncated walk sums", c1_oracles_agree},
      {2, "degree-weighted pair symmetry", c2_pair_symmetry},
      {3, "reverse push invariant and reserve band", c3_push_invariant},
      {4, "averaged reverse push invariant and widened band", c4_push_avg_invariant},
      {5, "synchronous push residual decay", c5_power_residual_decay},
      {6, "randomized push mean and variance", c6_rand_push_stats},
      {7, "relative-error contract across estimators", c7_error_contract},
      {8, "single-vertex score mean and variance", c8_single_node_stats},
      {9, "swap family separation and overlap counts", c9_families_separate},
      {10, "query scaling exponents", c10_scaling_exponents},
      {11, "CSV byte reproducibility", c11_csv_reproducibility},
  };
  bool all = true;
  for (const Row& row : rows) {
    Outcome o;
    try {
      o = row.fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %2d: %s%s%s\n", o.pass ? "PASS" : "FAIL", row.id, row.label,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
