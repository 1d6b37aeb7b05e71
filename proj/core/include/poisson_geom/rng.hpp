#pragma once

#include <cstdint>

#include "poisson_geom/algebra.hpp"

namespace poisson_geom {

// SplitMix64 (Steele, Lea, Flood 2014). The determinism contract of the
// verification reports names this exact generator; see README.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // The output scrambler alone, used to derive independent stream seeds.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Per-trial stream: state = mix(seed XOR mix(golden + trial)). Trials can
  // therefore run in any order, or in parallel, with identical draws.
  static constexpr SplitMix64 for_trial(std::uint64_t seed,
                                        std::uint64_t trial) {
    return SplitMix64(mix(seed ^ mix(0x9E3779B97F4A7C15ull + trial)));
  }

  // Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Components independently uniform in [-1,1].
  Vec3 vec_in_cube() {
    const double x = uniform(-1.0, 1.0);
    const double y = uniform(-1.0, 1.0);
    const double z = uniform(-1.0, 1.0);
    return {x, y, z};
  }

 private:
  std::uint64_t state_;
};

}  // namespace poisson_geom
