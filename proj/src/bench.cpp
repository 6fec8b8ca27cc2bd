#include "ppr/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

namespace ppr {

std::string csv_header() {
  return "family,n,m,delta,algo,model_flags,trial,seed,"
         "queries_deg,queries_neigh,queries_sorted,queries_jump,queries_adj,"
         "queries_total,estimate,exact,abs_err,rel_err,wall_ns";
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_row(const ExperimentRecord& rec) {
  double abs_err = std::abs(rec.estimate - rec.exact);
  double rel_err = abs_err / std::max(rec.exact, rec.delta);
  std::string out;
  out += csv_field(rec.family);
  out += ',' + std::to_string(rec.n);
  out += ',' + std::to_string(rec.m);
  out += ',' + format_double(rec.delta);
  out += ',' + csv_field(rec.algo);
  out += ',' + csv_field(rec.model_flags);
  out += ',' + std::to_string(rec.trial);
  out += ',' + std::to_string(rec.seed);
  out += ',' + std::to_string(rec.queries.deg);
  out += ',' + std::to_string(rec.queries.neigh);
  out += ',' + std::to_string(rec.queries.neigh_sorted);
  out += ',' + std::to_string(rec.queries.jump);
  out += ',' + std::to_string(rec.queries.adj);
  out += ',' + std::to_string(rec.queries.total());
  out += ',' + format_double(rec.estimate);
  out += ',' + format_double(rec.exact);
  out += ',' + format_double(abs_err);
  out += ',' + format_double(rel_err);
  out += ',' + std::to_string(rec.wall_ns);
  return out;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& recs) {
  out << csv_header() << '\n';
  for (const ExperimentRecord& r : recs) out << csv_row(r) << '\n';
}

ScalingFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw Error("scaling fit: size mismatch");
  if (xs.size() < 2) throw Error("scaling fit: needs at least 2 points");
  std::size_t k = xs.size();
  std::vector<double> lx(k), ly(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0) throw Error("scaling fit: values must be positive");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < k; ++i) mx += lx[i], my += ly[i];
  mx /= static_cast<double>(k);
  my /= static_cast<double>(k);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw Error("scaling fit: needs at least 2 distinct x values");
  ScalingFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double e = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss_res += e * e;
  }
  fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

std::vector<ExperimentRecord> run_trials(Count trials, int threads,
                                         const std::function<ExperimentRecord(Count)>& fn) {
  if (trials <= 0) return {};
  std::vector<ExperimentRecord> out(static_cast<std::size_t>(trials));
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(trials)));
  if (threads == 1) {
    for (Count i = 0; i < trials; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  std::atomic<Count> next{0};
  auto worker = [&] {
    for (;;) {
      Count i = next.fetch_add(1);
      if (i >= trials) return;
      out[static_cast<std::size_t>(i)] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return out;
}

}  // namespace ppr
