#pragma once

#include <cstdint>

namespace sosinv {

// Counter-based generator built on the splitmix64 finalizer: the value at
// counter k is mix(seed + (k+1) * 0x9E3779B97F4A7C15).  Stateless, so any
// stream position can be sampled directly and point sets replay bit-exactly
// across platforms.
struct CounterRng {
  std::uint64_t seed = 0;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t at(std::uint64_t counter) const {
    return mix(seed + (counter + 1) * 0x9E3779B97F4A7C15ull);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01(std::uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }

  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + uniform01(counter) * (hi - lo);
  }
};

}  // namespace sosinv
