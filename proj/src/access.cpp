#include "ppr/access.hpp"

#include <sstream>
#include <vector>

namespace ppr {

std::string model_flags_string(const AccessModel& model) {
  std::string out;
  auto add = [&out](const char* name) {
    if (!out.empty()) out += '+';
    out += name;
  };
  if (model.jump_enabled) add("jump");
  if (model.sorted_enabled) add("sorted");
  if (model.adj_enabled) add("adj");
  return out.empty() ? "base" : out;
}

AccessModel parse_model_flags(const std::string& text) {
  AccessModel model;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream sub(token);
    std::string flag;
    while (std::getline(sub, flag, '+')) {
      if (flag.empty() || flag == "base") continue;
      if (flag == "jump")
        model.jump_enabled = true;
      else if (flag == "sorted")
        model.sorted_enabled = true;
      else if (flag == "adj")
        model.adj_enabled = true;
      else
        throw ParseError("unknown model flag '" + flag + "'");
    }
  }
  return model;
}

void AccessSession::check_vertex(VertexId v, const char* op) const {
  if (!g_->has_vertex(v))
    throw InvalidVertexError(std::string(op) + ": vertex " + std::to_string(v) +
                             " out of range [0, " + std::to_string(g_->n) + ")");
}

Count AccessSession::deg(VertexId v) {
  check_vertex(v, "deg");
  ++counters_.deg;
  return g_->degree(v);
}

VertexId AccessSession::neigh(VertexId v, Count i) {
  check_vertex(v, "neigh");
  if (i < 1 || i > g_->degree(v))
    throw InvalidIndexError("neigh: index " + std::to_string(i) + " outside [1, " +
                            std::to_string(g_->degree(v)) + "] at vertex " + std::to_string(v));
  ++counters_.neigh;
  return g_->neigh[static_cast<std::size_t>(v)][static_cast<std::size_t>(i - 1)];
}

VertexId AccessSession::neigh_sorted(VertexId v, Count i) {
  if (!model_.sorted_enabled) throw ModelViolationError("neigh_sorted: disabled in model");
  check_vertex(v, "neigh_sorted");
  if (i < 1 || i > g_->degree(v))
    throw InvalidIndexError("neigh_sorted: index " + std::to_string(i) + " outside [1, " +
                            std::to_string(g_->degree(v)) + "] at vertex " + std::to_string(v));
  ++counters_.neigh_sorted;
  return g_->neigh_sorted[static_cast<std::size_t>(v)][static_cast<std::size_t>(i - 1)];
}

VertexId AccessSession::jump() {
  if (!model_.jump_enabled) throw ModelViolationError("jump: disabled in model");
  ++counters_.jump;
  return static_cast<VertexId>(rng_.below(g_->n));
}

bool AccessSession::adj(VertexId u, VertexId v) {
  if (!model_.adj_enabled) throw ModelViolationError("adj: disabled in model");
  check_vertex(u, "adj");
  check_vertex(v, "adj");
  if (u == v) throw InvalidVertexError("adj: u == v violates the simple-graph precondition");
  ++counters_.adj;
  return g_->has_edge(u, v);
}

}  // namespace ppr
