#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "ppr/exact.hpp"
#include "ppr/graph.hpp"
#include "ppr/walk.hpp"

using namespace ppr;

namespace {

const EstimatorConfig kCfg{};
const AccessModel kBase{};

double est_at(const SparseEstimate& est, VertexId v) {
  auto it = est.find(v);
  return it == est.end() ? 0.0 : it->second;
}

}  // namespace

TEST_CASE("walk count formulas") {
  CHECK(kappa_mc(kCfg) == doctest::Approx(3000.0));  // 3 / (c^2 p_f)
  CHECK(mc_walk_count(kCfg) == 30000);               // ceil(3000 / 0.1)

  EstimatorConfig coarse = kCfg;
  coarse.delta = 1.0;
  CHECK(mc_walk_count(coarse) == 3000);
  coarse.delta = 0.7;
  CHECK(mc_walk_count(coarse) == 4286);  // ceil(3000 / 0.7)

  CHECK(bmc_walk_count(1, kCfg) == 30000);
  CHECK(bmc_walk_count(5, kCfg) == 150000);

  CHECK(bmc_node_walk_count(1, kCfg) == 5000);  // d / (c^2 alpha p_f)
  CHECK(bmc_node_walk_count(7, kCfg) == 35000);
  CHECK(bmc_node_walk_count(0, kCfg) == 1);  // clamped floor
}

TEST_CASE("walks stop immediately at isolated vertices") {
  Graph g = make_graph(3, {{0, 1}});
  AccessSession session(g, kBase, 17);
  for (int i = 0; i < 20; ++i) {
    WalkOutcome o = random_walk(session, 2, kCfg.alpha);
    CHECK(o.endpoint == 2);
    CHECK(o.steps == 0);
  }
}

TEST_CASE("walks cost two queries per step") {
  Graph g = complete_graph(3);
  AccessSession session(g, kBase, 4242);
  Count steps = 0;
  for (int i = 0; i < 2000; ++i) steps += random_walk(session, 0, kCfg.alpha).steps;
  CHECK(session.counters().total() == 2 * steps);
  CHECK(session.counters().deg == steps);
  CHECK(session.counters().neigh == steps);
  CHECK(session.counters().jump == 0);
}

TEST_CASE("two-vertex endpoint distribution") {
  Graph g = make_graph(2, {{0, 1}});
  AccessSession session(g, kBase, 31337);
  const int walks = 100000;
  int at_start = 0;
  for (int i = 0; i < walks; ++i)
    if (random_walk(session, 0, kCfg.alpha).endpoint == 0) ++at_start;
  const double rate = static_cast<double>(at_start) / walks;
  CHECK(std::abs(rate - 1.0 / 1.8) <= 0.01);  // 0.5556 +- 0.01
}

TEST_CASE("triangle mean walk length") {
  Graph g = complete_graph(3);
  AccessSession session(g, kBase, 555);
  const int walks = 100000;
  double steps = 0.0;
  for (int i = 0; i < walks; ++i) steps += static_cast<double>(random_walk(session, 0, kCfg.alpha).steps);
  CHECK(std::abs(steps / walks - 4.0) <= 0.1);  // (1 - alpha) / alpha
}

TEST_CASE("endpoint frequencies track the exact distribution") {
  Graph g = path_graph(5);
  AccessSession session(g, kBase, 777);
  PprVector truth = exact_single_source(g, kCfg, 2);
  const int walks = 100000;
  std::vector<int> hits(5, 0);
  for (int i = 0; i < walks; ++i) ++hits[static_cast<std::size_t>(random_walk(session, 2, kCfg.alpha).endpoint)];
  for (VertexId v = 0; v < 5; ++v) {
    const double p = truth[v];
    const double se = std::sqrt(p * (1.0 - p) / walks);
    CHECK(std::abs(static_cast<double>(hits[static_cast<std::size_t>(v)]) / walks - p) <= 5.0 * se + 1e-12);
  }
}

TEST_CASE("forward estimator on a single vertex is exact") {
  Graph g = make_graph(1, {});
  AccessSession session(g, kBase, 1);
  SparseEstimate est = mc_single_source(session, 0, kCfg);
  REQUIRE(est.size() == 1);
  CHECK(est.at(0) == 1.0);
}

TEST_CASE("forward estimator is unbiased on the two-vertex graph") {
  Graph g = make_graph(2, {{0, 1}});
  EstimatorConfig cfg = kCfg;
  cfg.delta = 1.0;  // 3000 walks per run keeps the test quick
  const int runs = 400;
  AccessSession session(g, kBase, 2025);
  double mean = 0.0;
  for (int r = 0; r < runs; ++r) mean += est_at(mc_single_source(session, 0, cfg), 0);
  mean /= runs;
  const double truth = 1.0 / 1.8;
  // per-walk variance p(1-p) spread over runs * W walks
  const double se = std::sqrt(truth * (1.0 - truth) / (3000.0 * runs));
  CHECK(std::abs(mean - truth) <= 4.0 * se);
}

TEST_CASE("forward estimates live on endpoints only") {
  Graph g = make_graph(4, {{0, 1}, {1, 2}});  // vertex 3 unreachable from 0
  EstimatorConfig cfg = kCfg;
  cfg.delta = 1.0;
  AccessSession session(g, kBase, 9);
  SparseEstimate est = mc_single_source(session, 0, cfg);
  CHECK(est.count(3) == 0);
  double sum = 0.0;
  for (auto [v, val] : est) sum += val;
  CHECK(sum == doctest::Approx(1.0));  // frequencies over W walks
  CHECK(session.counters().jump == 0);
  CHECK(session.counters().neigh_sorted == 0);
  CHECK(session.counters().adj == 0);
}

TEST_CASE("reverse estimator rescales by degree") {
  Graph g = star_graph(5);  // hub 0 with leaves 1..4
  EstimatorConfig cfg = kCfg;
  cfg.delta = 1.0;
  AccessSession session(g, kBase, 12);
  const VertexId t = 0;
  const Count W = bmc_walk_count(4, cfg);
  SparseEstimate est = bmc_single_target(session, t, cfg);
  for (auto [u, val] : est) {
    // entries are count/W * d(t)/d(u), so scaling back must give an integer
    const double count = val * static_cast<double>(W) * static_cast<double>(g.degree(u)) /
                         static_cast<double>(g.degree(t));
    CHECK(std::abs(count - std::round(count)) <= 1e-6);
  }
}

TEST_CASE("reverse estimator is unbiased on the two-vertex graph") {
  Graph g = make_graph(2, {{0, 1}});
  EstimatorConfig cfg = kCfg;
  cfg.delta = 1.0;
  const int runs = 400;
  AccessSession session(g, kBase, 31415);
  double mean = 0.0;
  for (int r = 0; r < runs; ++r) mean += est_at(bmc_single_target(session, 1, cfg), 0);
  mean /= runs;
  const double truth = 0.8 / 1.8;  // pi(0, 1) via reversibility, equal degrees
  const double se = std::sqrt(truth * (1.0 - truth) / (3000.0 * runs));
  CHECK(std::abs(mean - truth) <= 4.0 * se);
}

TEST_CASE("reverse estimator at an isolated target") {
  Graph g = make_graph(3, {{0, 1}});
  AccessSession session(g, kBase, 3);
  SparseEstimate est = bmc_single_target(session, 2, kCfg);
  REQUIRE(est.size() == 1);
  CHECK(est.at(2) == 1.0);
  CHECK(session.counters().neigh == 0);  // no walks needed
}

TEST_CASE("node estimator handles the degenerate sizes") {
  Graph one = make_graph(1, {});
  AccessSession s1(one, kBase, 5);
  CHECK(bmc_single_node(s1, 0, kCfg) == 1.0);

  Graph iso = make_graph(4, {{0, 1}, {1, 2}});
  AccessSession s2(iso, kBase, 6);
  CHECK(bmc_single_node(s2, 3, kCfg) == doctest::Approx(0.25));
}

TEST_CASE("node estimator matches the averaged target vector") {
  // K2 plus an isolated vertex: pi(t) = (0.5556 + 0.4444 + 0) / 3
  Graph g = make_graph(3, {{0, 1}});
  EstimatorConfig cfg = kCfg;
  cfg.c = 0.3;  // W = 556 per run keeps 600 runs quick
  const Count W = bmc_node_walk_count(1, cfg);
  const int runs = 600;
  AccessSession session(g, kBase, 271828);
  double mean = 0.0, sq = 0.0;
  for (int r = 0; r < runs; ++r) {
    const double v = bmc_single_node(session, 0, cfg);
    mean += v;
    sq += v * v;
  }
  mean /= runs;
  const double var = sq / runs - mean * mean;
  const double se = std::sqrt(var / runs);
  CHECK(std::abs(mean - 1.0 / 3.0) <= 4.0 * se + 1e-9);
  CHECK(W == bmc_node_walk_count(g.degree(0), cfg));
}

TEST_CASE("node estimator is unbiased with mixed degrees") {
  Graph g = star_graph(4);
  const VertexId t = 1;  // leaf
  EstimatorConfig cfg = kCfg;
  cfg.c = 0.3;
  const double truth = exact_pagerank(g, cfg, t);
  const int runs = 600;
  AccessSession session(g, kBase, 161803);
  double mean = 0.0, sq = 0.0;
  for (int r = 0; r < runs; ++r) {
    const double v = bmc_single_node(session, t, cfg);
    mean += v;
    sq += v * v;
  }
  mean /= runs;
  const double se = std::sqrt((sq / runs - mean * mean) / runs);
  CHECK(std::abs(mean - truth) <= 4.0 * se + 1e-9);
}
