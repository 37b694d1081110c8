#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sosinv {

inline constexpr std::string_view kToolName = "sosinv";
inline constexpr std::string_view kToolVersion = "0.1.0";

// C(n, k) in double-safe integer range; the basis sizes used here stay far
// below 2^53.
inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// FNV-1a, used for content fingerprints of parsed programs.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value);

// Shortest decimal that round-trips is not what we want for stable fixtures;
// reports and certificates pin 17 significant digits instead.
std::string format_double(double value);

}  // namespace sosinv
