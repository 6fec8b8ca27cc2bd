#pragma once

#include <cstdint>

#include "ppr/types.hpp"

namespace ppr {

/** Deterministic splitmix64 stream. Self-contained so results are identical
 *  across platforms and standard libraries. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /** Uniform in [0, 1). */
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /** Uniform in [lo, hi). */
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /** Uniform integer in [0, n); unbiased via rejection. */
  Count below(Count n) {
    const auto un = static_cast<std::uint64_t>(n);
    const std::uint64_t rem = (UINT64_MAX % un + 1) % un;
    const std::uint64_t bound = UINT64_MAX - rem;
    std::uint64_t x = next_u64();
    while (x > bound) x = next_u64();
    return static_cast<Count>(x % un);
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

/** Independent per-trial stream from a master seed. */
inline Rng derive_stream(std::uint64_t master, std::uint64_t stream) {
  Rng mix(master ^ (0x2545f4914f6cdd1dULL * (stream + 1)));
  return Rng(mix.next_u64());
}

}  // namespace ppr
