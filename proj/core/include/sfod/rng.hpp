#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sfod {

/// Deterministic PRNG wrapper. All randomness in the pipeline flows through
/// caller-owned Rng instances; independent streams are derived from
/// (seed, tag) so workers never share state.
///
/// Uniform/normal transforms are written out by hand instead of using
/// std::*_distribution, whose output is implementation-defined. Two builds of
/// this code on different standard libraries draw identical sequences.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  /// Independent stream for a sub-task (e.g. one image of a dataset).
  Rng derive(uint64_t tag) const {
    uint64_t x = mix64(seed_of(gen_) ^ (0x9e3779b97f4a7c15ULL + tag));
    return Rng(x);
  }

  uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(gen_() % span);
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal via Box-Muller (no state cached; one draw per call).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  double normal(double mean, double std) { return mean + std * normal(); }

 private:
  std::mt19937_64 gen_;

  // mt19937_64 has no state accessor; re-draw a word to fold into derive().
  // The copy keeps the parent stream untouched.
  static uint64_t seed_of(std::mt19937_64 g) { return g(); }

  static uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }
};

}  // namespace sfod
