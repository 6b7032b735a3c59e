#pragma once

#include <cstdint>

#include "belief/dist.hpp"

namespace belief {

// splitmix64 (Steele/Lea/Flood; Vigna's fixed-increment variant). Chosen as
// the fixed, portable generator: identical output on every platform, and
// cheap to split into independent per-trace streams.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  // Stream i of a seeded run; streams are independent of scheduling order.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    return SplitMix64(mixer.next());
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform 53-bit fraction k / 2^53 as an exact rational, so acceptance
  // tests against exact probabilities carry bias below 2^-53.
  Rat next_unit() {
    return Rat(Int(next() >> 11), Int(1) << 53);
  }

  bool bernoulli(const Rat& p) { return next_unit() < p; }

  // Draw an index from a distribution by walking its cumulative weights.
  std::size_t sample(const Dist& d) {
    Rat u = next_unit();
    Rat cum = 0;
    std::size_t last_support = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d.weight(i) == 0) continue;
      last_support = i;
      cum += d.weight(i);
      if (u < cum) return i;
    }
    return last_support;
  }

 private:
  std::uint64_t state_;
};

}  // namespace belief
