#include "uihier/rng.hpp"

#include <cmath>
#include <cstdio>

namespace uihier {

double Rng::gaussian(double mean, double sigma) {
  // next_double() is in [0,1); shift away from 0 for the log.
  double u1 = 1.0 - next_double();
  double u2 = next_double();
  double r = std::sqrt(-2.0 * std::log(u1));
  return mean + sigma * r * std::cos(2.0 * M_PI * u2);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::uint64_t substream(std::uint64_t root_seed, std::string_view name, std::uint64_t index) {
  std::uint64_t h = fnv1a64(name);
  // run the combined state through one SplitMix64 advance so that nearby
  // (seed, index) pairs land far apart
  Rng r(root_seed ^ h ^ (index * 0x9E3779B97F4A7C15ULL));
  return r.next_u64();
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

}  // namespace uihier
