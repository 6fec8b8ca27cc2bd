#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "ppr/access.hpp"
#include "ppr/types.hpp"

namespace ppr {

// One estimator invocation, as written to results CSV.
struct ExperimentRecord {
  std::string family;
  Count n = 0;
  Count m = 0;
  double delta = 0.0;
  std::string algo;
  std::string model_flags;
  Count trial = 0;
  std::uint64_t seed = 0;
  QueryCounters queries;
  double estimate = 0.0;
  double exact = 0.0;
  std::int64_t wall_ns = 0;
};

std::string csv_header();
std::string csv_field(const std::string& raw);
std::string format_double(double v);
std::string csv_row(const ExperimentRecord& rec);
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& recs);

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

// Least-squares line through (log x_i, log y_i). Inputs must be positive and
// contain at least two distinct x values.
ScalingFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys);

// Runs fn(0), ..., fn(trials-1) over a worker pool and returns the results in
// trial order regardless of scheduling. fn must not share mutable state.
std::vector<ExperimentRecord> run_trials(Count trials, int threads,
                                         const std::function<ExperimentRecord(Count)>& fn);

}  // namespace ppr
