#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace ppr {

using VertexId = std::int32_t;
using Count = std::int64_t;

/** Sparse per-vertex values; absent keys mean 0. Ordered so iteration is
 *  deterministic (estimator RNG consumption depends on it). */
using SparseEstimate = std::map<VertexId, double>;

struct EstimatorConfig {
  double alpha = 0.2;
  double c = 0.1;
  double p_f = 0.1;
  double delta = 0.1;
  std::uint64_t seed = 1;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidVertexError : Error {
  using Error::Error;
};
struct InvalidIndexError : Error {
  using Error::Error;
};
struct ModelViolationError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct SwapError : Error {
  using Error::Error;
};
struct GenError : Error {
  using Error::Error;
};

}  // namespace ppr
