#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ppr/access.hpp"
#include "ppr/graph.hpp"
#include "ppr/rng.hpp"
#include "ppr/types.hpp"

namespace ppr {

enum class FamilyId {
  sp_worst,
  sp_avg,
  sp_avg_xor,
  ss_avg,
  st_wc_a,
  st_wc_js,
  st_avg_a,
  st_avg_j,
  st_avg_js,
  sn_worst,
  sn_worst_all,
  sn_avg,
  sn_avg_all,
};

FamilyId parse_family(const std::string& name);
std::string family_name(FamilyId id);
std::vector<std::string> family_names();

struct SwapQuadruple {
  VertexId q1 = 0, q2 = 0, q3 = 0, q4 = 0;
};

/** Half-open id interval [lo, hi). */
struct VertexRange {
  VertexId lo = 0, hi = 0;
  Count size() const { return hi - lo; }
  bool contains(VertexId v) const { return v >= lo && v < hi; }
};

/** Product R1 x R2 x R3 x R4 of quadruples, stored by ranges. */
struct QuadBlock {
  VertexRange r1, r2, r3, r4;
  Count size() const { return r1.size() * r2.size() * r3.size() * r4.size(); }
};

/** Which quadruple component supplies the per-query vertex; fixed means the
 *  family's designated s or t. */
enum class PairRule { fixed, q1, q2, q3 };

struct FamilyParams {
  Count x = 0, y = 0, z = 0;
  Count copies_k = 1, copies_l = 1;
  int case_id = 0;
};

/** One edge-pair class of E_q^± shared by many q, with the counts and
 *  visibility flags the overlap bound needs. */
struct OverlapCategory {
  bool is_edge = false;        // pair lies in E of the base graph
  Count count = 0;             // |{q : pair ∈ E_q^±}| for a pair in this class
  bool in_w_comps = false;     // both endpoints in components of the W set
  bool in_target_comp = false; // both endpoints in t's component
  bool touches_reserved = false;
};

struct SwapFamily {
  Graph base;
  FamilyId id{};
  std::string name;
  FamilyParams params;
  std::optional<VertexId> s, t;
  std::vector<QuadBlock> quadruple_space;
  Count n_filler = 0, m_filler = 0;
  AccessModel model;          // query set of the family's hardness claim
  double c_bound = 1.0;       // largest c the separation check supports
  double delta = 0.0;
  bool multiplicative = false;         // sn gap form instead of additive
  bool subdivide = false;              // swaps route through reserved vertices
  bool restrict_vw_to_target = false;  // overlap counts only t's component
  std::array<VertexId, 2> reserved{-1, -1};
  std::vector<OverlapCategory> categories;

  PairRule source_rule = PairRule::fixed;
  PairRule target_rule = PairRule::fixed;

  Count q_size() const;
  SwapQuadruple q_at(Count index) const;
  SwapQuadruple sample_q(Rng& rng) const;
  VertexId source_for(const SwapQuadruple& q) const;
  VertexId target_for(const SwapQuadruple& q) const;
};

bool swappable(const Graph& g, const SwapQuadruple& q);

/** Returns G_q: E_q^- = {{q1,q2},{q3,q4}} out, E_q^+ = {{q1,q3},{q2,q4}}
 *  in, each new neighbor at the removed neighbor's list position. Throws
 *  SwapError naming the first failing condition. */
Graph apply_swap(const Graph& g, const SwapQuadruple& q);

/** Like apply_swap, but each E_q^+ edge becomes a 2-path through one of the
 *  two lowest-id isolated vertices of g. */
Graph subdivide_swap(const Graph& g, const SwapQuadruple& q);

SwapFamily gen_family(FamilyId id, Count n, Count m, double delta, const EstimatorConfig& cfg);
SwapFamily gen_family(const std::string& name, Count n, Count m, double delta,
                      const EstimatorConfig& cfg);

/** K = max over pairs visible to the model of the number of q whose swap
 *  touches that pair. Closed form from the family's category table. */
Count compute_overlap_K(const SwapFamily& fam, const AccessModel& model);
/** Same quantity by enumerating Q; requires |Q| <= 10^5. */
Count brute_force_overlap_K(const SwapFamily& fam, const AccessModel& model);

struct SeparationReport {
  double pi_base = 0.0;
  double pi_swapped_min = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

/** Oracle check that the family separates: base value (near) zero and every
 *  sampled swapped instance above threshold. Additive families use
 *  2·c_eff·δ against π(s,t); sn families demand π_{G_q}(t) ≥
 *  (1+4·c_eff)·π_G(t). c_eff = min(cfg.c, fam.c_bound). */
SeparationReport verify_separation(const SwapFamily& fam, const EstimatorConfig& cfg,
                                   Count samples);

}  // namespace ppr
