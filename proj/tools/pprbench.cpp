#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppr/access.hpp"
#include "ppr/bench.hpp"
#include "ppr/bidirectional.hpp"
#include "ppr/exact.hpp"
#include "ppr/graph.hpp"
#include "ppr/instances.hpp"
#include "ppr/push.hpp"
#include "ppr/walk.hpp"

namespace {

using namespace ppr;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitIo = 2;
constexpr int kExitModel = 3;
constexpr int kExitUsage = 4;

enum class Algo {
  mc,
  bmc,
  bmc_node,
  bp,
  power,
  randpush,
  hybrid,
  bp_avg,
  single_node,
  bippr_avg,
  jump_st,
};

const std::vector<std::pair<std::string, Algo>> kAlgoNames = {
    {"mc", Algo::mc},
    {"bmc", Algo::bmc},
    {"bmc-node", Algo::bmc_node},
    {"bp", Algo::bp},
    {"power", Algo::power},
    {"randpush", Algo::randpush},
    {"hybrid", Algo::hybrid},
    {"bp-avg", Algo::bp_avg},
    {"single-node", Algo::single_node},
    {"bippr-avg", Algo::bippr_avg},
    {"jump-st", Algo::jump_st},
};

std::vector<std::string> algo_names() {
  std::vector<std::string> out;
  for (const auto& [name, algo] : kAlgoNames) out.push_back(name);
  return out;
}

Algo parse_algo(const std::string& name) {
  for (const auto& [text, algo] : kAlgoNames)
    if (text == name) return algo;
  throw ParseError("unknown algo '" + name + "'");
}

bool is_node_algo(Algo a) { return a == Algo::bmc_node || a == Algo::single_node; }

struct GlobalOpts {
  EstimatorConfig cfg;
  std::string model_text = "jump,sorted,adj";
  std::string csv_path;
  bool no_wall = false;
  int threads = 1;
};

struct AlgoOpts {
  std::string algo_name = "mc";
  VertexId source = 0;
  VertexId target = 0;
  double r_max = 0.0;   // 0 means the algorithm default
  double theta = 0.0;
  Count rounds = -1;
  std::string variant = "worst";  // jump-st; power uses target/source
  bool lazy = false;
};

double take(const SparseEstimate& est, VertexId v) {
  auto it = est.find(v);
  return it == est.end() ? 0.0 : it->second;
}

/** One estimator invocation through a counting session. */
double run_algo(AccessSession& ses, Algo algo, const AlgoOpts& opt,
                const EstimatorConfig& cfg) {
  switch (algo) {
    case Algo::mc:
      return take(mc_single_source(ses, opt.source, cfg), opt.target);
    case Algo::bmc:
      return take(bmc_single_target(ses, opt.target, cfg), opt.source);
    case Algo::bmc_node:
      return bmc_single_node(ses, opt.target, cfg);
    case Algo::bp: {
      double rm = opt.r_max > 0.0 ? opt.r_max : cfg.c * cfg.delta;
      return backwards_push(ses, opt.target, rm, cfg).reserve(opt.source);
    }
    case Algo::power: {
      Count L = opt.rounds >= 0 ? opt.rounds : hybrid_params(1, ses.n(), cfg).rounds_L;
      if (opt.variant == "source")
        return power_method_source(ses, opt.source, L, cfg).reserve(opt.target);
      return power_method_target(ses, opt.target, L, cfg).reserve(opt.source);
    }
    case Algo::randpush: {
      PushParams def = hybrid_params(ses.graph().degree(opt.target), ses.n(), cfg);
      double th = opt.theta > 0.0 ? opt.theta : def.theta;
      Count L = opt.rounds >= 0 ? opt.rounds : def.rounds_L;
      PushState init;
      init.r[opt.target] = 1.0;
      return take(rand_push(ses, std::move(init), th, L, cfg), opt.source);
    }
    case Algo::hybrid:
      return take(hybrid_single_target(ses, opt.target, cfg), opt.source);
    case Algo::bp_avg: {
      double rm = opt.r_max > 0.0 ? opt.r_max : cfg.c * cfg.delta / 2.0;
      return backwards_push_avg(ses, opt.target, rm, cfg).reserve(opt.source);
    }
    case Algo::single_node:
      return single_node(ses, opt.target, cfg);
    case Algo::bippr_avg:
      return bippr_avg_pair(ses, opt.source, opt.target, cfg, opt.lazy);
    case Algo::jump_st: {
      StVariant v = opt.variant == "avg" ? StVariant::avg : StVariant::worst;
      return take(jump_bidirectional_st(ses, opt.target, cfg, v), opt.source);
    }
  }
  throw Error("unreachable");
}

double oracle_value(const Graph& g, Algo algo, const AlgoOpts& opt,
                    const EstimatorConfig& cfg) {
  if (is_node_algo(algo)) return exact_pagerank(g, cfg, opt.target);
  if (algo == Algo::mc) return exact_single_source(g, cfg, opt.source)[opt.target];
  return exact_single_target(g, cfg, opt.target)[opt.source];
}

ExperimentRecord run_record(const Graph& g, const AccessModel& model, Algo algo,
                            const AlgoOpts& opt, const GlobalOpts& gl, Count trial,
                            const EstimatorConfig& cfg) {
  AccessSession ses(g, model, gl.cfg.seed + static_cast<std::uint64_t>(trial));
  auto t0 = std::chrono::steady_clock::now();
  double estimate = run_algo(ses, algo, opt, cfg);
  auto t1 = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.n = g.n;
  rec.m = g.m;
  rec.delta = cfg.delta;
  rec.algo = opt.algo_name;
  rec.model_flags = model_flags_string(model);
  rec.trial = trial;
  rec.seed = gl.cfg.seed + static_cast<std::uint64_t>(trial);
  rec.queries = ses.counters();
  rec.estimate = estimate;
  rec.exact = std::numeric_limits<double>::quiet_NaN();
  if (!gl.no_wall)
    rec.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  return rec;
}

void emit_csv(const GlobalOpts& gl, const std::vector<ExperimentRecord>& recs) {
  if (gl.csv_path.empty()) {
    write_csv(std::cout, recs);
    return;
  }
  std::ofstream out(gl.csv_path);
  if (!out) throw ParseError("cannot open '" + gl.csv_path + "' for writing");
  write_csv(out, recs);
}

std::string file_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

// ---------------------------------------------------------------- estimate

struct EstimateOpts {
  std::string graph_path;
  AlgoOpts algo;
  Count trials = 1;
  bool with_exact = false;
};

int cmd_estimate(const GlobalOpts& gl, const EstimateOpts& eo) {
  Graph g = load_graph_file(eo.graph_path);
  AccessModel model = parse_model_flags(gl.model_text);
  Algo algo = parse_algo(eo.algo.algo_name);
  if (!g.has_vertex(eo.algo.target) || !g.has_vertex(eo.algo.source))
    throw GenError("source/target outside [0, n)");
  double exact = eo.with_exact ? oracle_value(g, algo, eo.algo, gl.cfg)
                               : std::numeric_limits<double>::quiet_NaN();
  std::string family = file_stem(eo.graph_path);
  std::vector<ExperimentRecord> recs =
      run_trials(eo.trials, gl.threads, [&](Count trial) {
        ExperimentRecord rec = run_record(g, model, algo, eo.algo, gl, trial, gl.cfg);
        rec.family = family;
        rec.exact = exact;
        return rec;
      });
  emit_csv(gl, recs);
  return kExitOk;
}

// --------------------------------------------------------------------- gen

struct GenOpts {
  std::string family;
  Count n = 0;
  Count m = 0;
  double delta = 0.1;
  std::string out_path;
  std::string swap_dir;
  Count swaps = 0;
};

int cmd_gen(const GlobalOpts& gl, const GenOpts& go) {
  SwapFamily fam = gen_family(go.family, go.n, go.m, go.delta, gl.cfg);
  save_graph_file(fam.base, go.out_path);
  std::printf("%s: n=%d m=%lld x=%lld y=%lld z=%lld copies=(%lld,%lld) case=%d "
              "|Q|=%lld K=%lld -> %s\n",
              fam.name.c_str(), fam.base.n, static_cast<long long>(fam.base.m),
              static_cast<long long>(fam.params.x), static_cast<long long>(fam.params.y),
              static_cast<long long>(fam.params.z),
              static_cast<long long>(fam.params.copies_k),
              static_cast<long long>(fam.params.copies_l), fam.params.case_id,
              static_cast<long long>(fam.q_size()),
              static_cast<long long>(compute_overlap_K(fam, fam.model)),
              go.out_path.c_str());
  if (go.swaps <= 0) return kExitOk;
  if (go.swap_dir.empty()) throw GenError("--swaps needs --swap-out");
  std::filesystem::create_directories(go.swap_dir);
  std::ofstream tsv(go.swap_dir + "/swaps.tsv");
  if (!tsv) throw ParseError("cannot open swaps.tsv for writing");
  tsv << "index\tq1\tq2\tq3\tq4\n";
  Rng rng(gl.cfg.seed);
  for (Count i = 0; i < go.swaps; ++i) {
    SwapQuadruple q = fam.sample_q(rng);
    Graph gq = fam.subdivide ? subdivide_swap(fam.base, q) : apply_swap(fam.base, q);
    char name[32];
    std::snprintf(name, sizeof name, "swap_%04lld.graph", static_cast<long long>(i));
    save_graph_file(gq, go.swap_dir + "/" + name);
    tsv << i << '\t' << q.q1 << '\t' << q.q2 << '\t' << q.q3 << '\t' << q.q4 << '\n';
  }
  std::printf("wrote %lld swapped graphs to %s\n", static_cast<long long>(go.swaps),
              go.swap_dir.c_str());
  return kExitOk;
}

// ------------------------------------------------------------------- exact

struct ExactOpts {
  std::string graph_path;
  VertexId source = -1;
  VertexId target = -1;
};

int cmd_exact(const GlobalOpts& gl, const ExactOpts& eo) {
  Graph g = load_graph_file(eo.graph_path);
  if (eo.target < 0) throw GenError("exact needs --target");
  double v = eo.source >= 0 ? exact_single_target(g, gl.cfg, eo.target)[eo.source]
                            : exact_pagerank(g, gl.cfg, eo.target);
  std::printf("%s\n", format_double(v).c_str());
  return kExitOk;
}

// ------------------------------------------------------------------- bench

struct BenchOpts {
  AlgoOpts algo;
  std::string family;
  std::string graph_path;
  std::string sweep = "n";  // n | m | delta-inv
  std::vector<double> sizes;
  Count trials = 10;
  double m_per_n = 4.0;
  Count base_n = 0;
  Count base_m = 0;
  double slope_tol = 0.15;
  double target_slope = std::numeric_limits<double>::quiet_NaN();
  bool has_source = false;
  bool has_target = false;
};

struct SweepPoint {
  double size = 0.0;
  double mean_queries = 0.0;
};

int cmd_bench(const GlobalOpts& gl, const BenchOpts& bo) {
  if (bo.sizes.size() < 3) {
    std::cerr << "bench: need at least 3 grid points\n";
    return kExitUsage;
  }
  Algo algo = parse_algo(bo.algo.algo_name);
  AccessModel model = parse_model_flags(gl.model_text);

  Graph fixed;
  AlgoOpts fixed_opt = bo.algo;
  if (bo.sweep == "delta-inv") {
    if (bo.graph_path.empty()) throw GenError("delta-inv sweep needs --graph");
    fixed = load_graph_file(bo.graph_path);
  }

  std::vector<ExperimentRecord> all;
  std::vector<SweepPoint> points;
  for (double size : bo.sizes) {
    EstimatorConfig cfg = gl.cfg;
    const Graph* g = nullptr;
    AlgoOpts opt = bo.algo;
    std::string family = bo.family;
    SwapFamily fam;
    if (bo.sweep == "delta-inv") {
      cfg.delta = 1.0 / size;
      g = &fixed;
      family = file_stem(bo.graph_path);
    } else {
      Count nn, mm;
      if (bo.sweep == "n") {
        nn = static_cast<Count>(size);
        mm = bo.base_m > 0 ? bo.base_m
                           : std::max(nn, static_cast<Count>(bo.m_per_n * static_cast<double>(nn)));
      } else if (bo.sweep == "m") {
        mm = static_cast<Count>(size);
        Count root = static_cast<Count>(std::ceil(std::sqrt(static_cast<double>(mm))));
        nn = bo.base_n > 0 ? bo.base_n : 2 * root;
      } else {
        throw GenError("unknown sweep '" + bo.sweep + "'");
      }
      fam = gen_family(family, nn, mm, cfg.delta, cfg);
      g = &fam.base;
      if (!bo.has_source)
        opt.source = fam.s ? *fam.s : fam.source_for(fam.q_at(0));
      if (!bo.has_target)
        opt.target = fam.t ? *fam.t : fam.target_for(fam.q_at(0));
    }
    std::vector<ExperimentRecord> recs =
        run_trials(bo.trials, gl.threads, [&](Count trial) {
          ExperimentRecord rec = run_record(*g, model, algo, opt, gl, trial, cfg);
          rec.family = family;
          return rec;
        });
    double mean = 0.0;
    for (const ExperimentRecord& r : recs) {
      mean += static_cast<double>(r.queries.total());
      all.push_back(r);
    }
    mean /= static_cast<double>(recs.size());
    points.push_back({size, mean});
    std::printf("size=%.6g mean_queries=%.6g\n", size, mean);
  }

  std::vector<double> xs, ys;
  for (const SweepPoint& p : points) xs.push_back(p.size), ys.push_back(p.mean_queries);
  ScalingFit fit = fit_loglog(xs, ys);
  std::printf("slope=%.4f intercept=%.4f r2=%.4f\n", fit.slope, fit.intercept, fit.r2);
  if (!gl.csv_path.empty()) emit_csv(gl, all);
  if (!std::isnan(bo.target_slope)) {
    bool pass = std::abs(fit.slope - bo.target_slope) <= bo.slope_tol;
    std::printf("target=%.4f tol=%.2f %s\n", bo.target_slope, bo.slope_tol,
                pass ? "PASS" : "FAIL");
    return pass ? kExitOk : kExitCheckFailed;
  }
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyOpts {
  std::string suite = "invariants";
  std::string family;  // empty = all
  Count n = 0;
  Count m = 0;
  double delta = 0.0;
  Count samples = 20;
  Count runs = 70;
  std::string algo;  // empty = all contract algos
};

struct FamilyDefaults {
  const char* name;
  Count n, m;
  double delta;
};

const FamilyDefaults kFamilyMatrix[] = {
    {"sp-worst", 60, 120, 0.05},   {"sp-avg", 64, 256, 0.1},
    {"sp-avg-xor", 64, 256, 0.1},  {"ss-avg", 64, 256, 0.1},
    {"st-wc-a", 40, 80, 0.2},      {"st-wc-js", 40, 80, 0.2},
    {"st-avg-a", 64, 256, 0.1},    {"st-avg-j", 64, 256, 0.1},
    {"st-avg-js", 64, 256, 0.1},   {"sn-worst", 100, 400, 0.04},
    {"sn-worst-all", 100, 400, 0.04}, {"sn-avg", 100, 400, 0.04},
    {"sn-avg-all", 100, 400, 0.04},
};

struct CheckLog {
  int failures = 0;
  void report(bool ok, const std::string& what) {
    std::printf("%s %s\n", ok ? "ok  " : "FAIL", what.c_str());
    if (!ok) ++failures;
  }
};

std::vector<FamilyDefaults> selected_families(const VerifyOpts& vo) {
  std::vector<FamilyDefaults> out;
  for (const FamilyDefaults& fd : kFamilyMatrix) {
    if (!vo.family.empty() && vo.family != fd.name) continue;
    FamilyDefaults use = fd;
    if (vo.n > 0) use.n = vo.n;
    if (vo.m > 0) use.m = vo.m;
    if (vo.delta > 0.0) use.delta = vo.delta;
    out.push_back(use);
  }
  if (out.empty()) throw GenError("unknown family '" + vo.family + "'");
  return out;
}

int verify_invariants(const GlobalOpts& gl, const VerifyOpts& vo) {
  CheckLog log;
  for (const FamilyDefaults& fd : selected_families(vo)) {
    SwapFamily fam = gen_family(fd.name, fd.n, fd.m, fd.delta, gl.cfg);
    const Graph& g = fam.base;
    std::string tag = fam.name;
    log.report(g.n >= fd.n && g.n <= 8 * fd.n && g.m >= fd.m && g.m <= 8 * fd.m,
               tag + " size envelope");

    Rng rng(gl.cfg.seed);
    bool all_swappable = true, degrees_ok = true, dcompat_ok = true;
    for (int i = 0; i < 100; ++i) {
      SwapQuadruple q = fam.sample_q(rng);
      if (!swappable(g, q)) all_swappable = false;
      Graph gq = fam.subdivide ? subdivide_swap(g, q) : apply_swap(g, q);
      for (VertexId v = 0; v < g.n; ++v) {
        Count want = g.degree(v);
        if (fam.subdivide && (v == fam.reserved[0] || v == fam.reserved[1])) want = 2;
        if (gq.degree(v) != want) degrees_ok = false;
      }
      if (fam.model.sorted_enabled &&
          (g.degree(q.q1) != g.degree(q.q4) || g.degree(q.q2) != g.degree(q.q3)))
        dcompat_ok = false;
    }
    log.report(all_swappable, tag + " sampled q swappable");
    log.report(degrees_ok, tag + " swap preserves degrees");
    if (fam.model.sorted_enabled) log.report(dcompat_ok, tag + " swap degree compatibility");

    log.report(compute_overlap_K(fam, fam.model) == brute_force_overlap_K(fam, fam.model),
               tag + " overlap K closed form = brute force");
  }
  return log.failures == 0 ? kExitOk : kExitCheckFailed;
}

int verify_separation_suite(const GlobalOpts& gl, const VerifyOpts& vo) {
  CheckLog log;
  for (const FamilyDefaults& fd : selected_families(vo)) {
    EstimatorConfig cfg = gl.cfg;
    SwapFamily fam = gen_family(fd.name, fd.n, fd.m, fd.delta, cfg);
    SeparationReport rep = verify_separation(fam, cfg, vo.samples);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s base=%.6g swapped_min=%.6g threshold=%.6g",
                  fam.name.c_str(), rep.pi_base, rep.pi_swapped_min, rep.threshold);
    log.report(rep.passed, buf);
  }
  return log.failures == 0 ? kExitOk : kExitCheckFailed;
}

int verify_accuracy(const GlobalOpts& gl, const VerifyOpts& vo) {
  CheckLog log;
  std::vector<std::string> algos;
  if (vo.algo.empty())
    algos = {"mc", "bmc", "hybrid", "bp-avg", "bippr-avg", "jump-st", "single-node"};
  else
    algos = {vo.algo};

  Rng gen_rng(gl.cfg.seed);
  std::vector<Graph> graphs;
  graphs.push_back(gnm_graph(24, 48, gen_rng));
  graphs.push_back(gnm_graph(32, 96, gen_rng));
  graphs.push_back(star_graph(16));
  EstimatorConfig cfg = gl.cfg;
  if (vo.delta > 0.0) cfg.delta = vo.delta;

  for (const std::string& name : algos) {
    Algo algo = parse_algo(name);
    Count runs_per_graph = std::max<Count>(1, vo.runs);
    Count violations = 0, total = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = graphs[gi];
      AlgoOpts opt;
      opt.algo_name = name;
      VertexId t = 0;
      for (VertexId v = 1; v < g.n; ++v)
        if (g.degree(v) > 0 && g.degree(v) < g.degree(t)) t = v;
      opt.target = t;
      opt.source = t == 0 ? g.n - 1 : 0;
      double truth = oracle_value(g, algo, opt, cfg);
      double allowed = cfg.c * std::max(truth, cfg.delta);
      std::vector<ExperimentRecord> recs =
          run_trials(runs_per_graph, gl.threads, [&](Count trial) {
            EstimatorConfig local = cfg;
            local.seed = cfg.seed + 7919 * static_cast<std::uint64_t>(gi) +
                         static_cast<std::uint64_t>(trial);
            AccessSession ses(g, AccessModel{true, true, true}, local.seed);
            ExperimentRecord rec;
            rec.estimate = run_algo(ses, algo, opt, local);
            return rec;
          });
      for (const ExperimentRecord& r : recs) {
        ++total;
        if (std::abs(r.estimate - truth) >= allowed) ++violations;
      }
    }
    double rate = static_cast<double>(violations) / static_cast<double>(total);
    char buf[120];
    std::snprintf(buf, sizeof buf, "%s violation_rate=%.4f over %lld runs (cap %.4f)",
                  name.c_str(), rate, static_cast<long long>(total), cfg.p_f + 0.05);
    log.report(rate <= cfg.p_f + 0.05, buf);
  }
  return log.failures == 0 ? kExitOk : kExitCheckFailed;
}

int verify_scaling_smoke(const GlobalOpts& gl) {
  BenchOpts bo;
  bo.algo.algo_name = "bmc-node";
  bo.family = "sn-worst";
  bo.sweep = "m";
  bo.sizes = {1024, 4096, 16384};
  bo.trials = 5;
  bo.slope_tol = 0.3;
  bo.target_slope = 0.5;
  GlobalOpts gl2 = gl;
  gl2.csv_path.clear();
  return cmd_bench(gl2, bo);
}

int cmd_verify(const GlobalOpts& gl, const VerifyOpts& vo) {
  if (vo.suite == "invariants") return verify_invariants(gl, vo);
  if (vo.suite == "separation") return verify_separation_suite(gl, vo);
  if (vo.suite == "accuracy") return verify_accuracy(gl, vo);
  if (vo.suite == "scaling-smoke") return verify_scaling_smoke(gl);
  std::cerr << "verify: unknown suite '" << vo.suite << "'\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"personalized pagerank estimators over an instrumented oracle-access graph"};
  app.fallthrough(true);
  app.require_subcommand(1);

  GlobalOpts gl;
  app.add_option("--alpha", gl.cfg.alpha, "stop probability")->check(CLI::Range(1e-9, 1.0));
  app.add_option("--c", gl.cfg.c, "relative error bound");
  app.add_option("--pf", gl.cfg.p_f, "failure probability");
  app.add_option("--delta", gl.cfg.delta, "approximation threshold");
  app.add_option("--seed", gl.cfg.seed, "master seed");
  app.add_option("--model", gl.model_text, "enabled queries, e.g. jump,sorted,adj or base");
  app.add_option("--csv", gl.csv_path, "write CSV here instead of stdout");
  app.add_option("--threads", gl.threads, "worker threads for trials");
  app.add_flag("--no-wall", gl.no_wall, "zero the wall_ns column for byte-stable output");

  EstimateOpts eo;
  CLI::App* est = app.add_subcommand("estimate", "run an estimator and emit CSV rows");
  est->add_option("--algo", eo.algo.algo_name, "estimator id")
      ->required()
      ->check(CLI::IsMember(algo_names()));
  est->add_option("--graph", eo.graph_path, "graph file")->required();
  est->add_option("--source", eo.algo.source, "source vertex");
  est->add_option("--target", eo.algo.target, "target vertex");
  est->add_option("--trials", eo.trials, "repetitions with seeds seed+trial");
  est->add_option("--rmax", eo.algo.r_max, "push threshold override");
  est->add_option("--theta", eo.algo.theta, "randomized push increment override");
  est->add_option("--rounds", eo.algo.rounds, "round count override");
  est->add_option("--variant", eo.algo.variant, "worst|avg for jump-st, target|source for power");
  est->add_flag("--lazy", eo.algo.lazy, "endpoint-corrected bippr-avg");
  est->add_flag("--with-exact", eo.with_exact, "join oracle values");

  GenOpts go;
  CLI::App* gen = app.add_subcommand("gen", "generate a hard-instance family");
  gen->add_option("--family", go.family, "family id")
      ->required()
      ->check(CLI::IsMember(family_names()));
  gen->add_option("--n", go.n, "requested vertex count")->required();
  gen->add_option("--m", go.m, "requested edge count")->required();
  gen->add_option("--gen-delta", go.delta, "family threshold");
  gen->add_option("--out", go.out_path, "base graph file")->required();
  gen->add_option("--swap-out", go.swap_dir, "directory for swapped variants");
  gen->add_option("--swaps", go.swaps, "number of swapped variants");

  ExactOpts xo;
  CLI::App* exa = app.add_subcommand("exact", "print an oracle value");
  exa->add_option("--graph", xo.graph_path, "graph file")->required();
  exa->add_option("--source", xo.source, "source vertex (omit for centrality)");
  exa->add_option("--target", xo.target, "target vertex");

  BenchOpts bo;
  CLI::App* ben = app.add_subcommand("bench", "sweep sizes and fit a scaling exponent");
  ben->add_option("--algo", bo.algo.algo_name, "estimator id")
      ->required()
      ->check(CLI::IsMember(algo_names()));
  ben->add_option("--family", bo.family, "family id for n/m sweeps")
      ->check(CLI::IsMember(family_names()));
  ben->add_option("--graph", bo.graph_path, "fixed graph for delta-inv sweeps");
  ben->add_option("--sweep", bo.sweep, "n | m | delta-inv")
      ->check(CLI::IsMember(std::vector<std::string>{"n", "m", "delta-inv"}));
  ben->add_option("--sizes", bo.sizes, "grid values (>= 3)")->delimiter(',');
  ben->add_option("--trials", bo.trials, "trials per grid point")->check(CLI::Range(5, 1000000));
  ben->add_option("--m-per-n", bo.m_per_n, "edge density for n sweeps");
  ben->add_option("--base-n", bo.base_n, "fixed n for m sweeps");
  ben->add_option("--base-m", bo.base_m, "fixed m for n sweeps");
  ben->add_option("--target-slope", bo.target_slope, "expected exponent");
  ben->add_option("--slope-tol", bo.slope_tol, "pass window around the target");
  auto* bsrc = ben->add_option("--source", bo.algo.source, "source vertex override");
  auto* btgt = ben->add_option("--target", bo.algo.target, "target vertex override");
  ben->add_option("--variant", bo.algo.variant, "estimator variant");

  VerifyOpts vo;
  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", vo.suite, "invariants | separation | accuracy | scaling-smoke")
      ->required();
  ver->add_option("--family", vo.family, "restrict to one family");
  ver->add_option("--n", vo.n, "family n override");
  ver->add_option("--m", vo.m, "family m override");
  ver->add_option("--sep-delta", vo.delta, "family delta override");
  ver->add_option("--samples", vo.samples, "sampled q per family");
  ver->add_option("--runs", vo.runs, "runs per graph for accuracy");
  ver->add_option("--algo", vo.algo, "restrict accuracy suite to one estimator")
      ->check(CLI::IsMember(algo_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  bo.has_source = bsrc->count() > 0;
  bo.has_target = btgt->count() > 0;

  try {
    if (*est) return cmd_estimate(gl, eo);
    if (*gen) return cmd_gen(gl, go);
    if (*exa) return cmd_exact(gl, xo);
    if (*ben) return cmd_bench(gl, bo);
    if (*ver) return cmd_verify(gl, vo);
    return kExitUsage;
  } catch (const ModelViolationError& e) {
    std::cerr << "model violation: " << e.what() << '\n';
    return kExitModel;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const GenError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidVertexError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidIndexError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
