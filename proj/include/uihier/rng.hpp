#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace uihier {

// SplitMix64 stream. Fixed algorithm so that seeded runs reproduce
// bit-identically across platforms and standard-library versions
// (std::mt19937 distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // uniform integer in [0, n)
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

  int uniform_int(int lo, int hi_inclusive) {
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
  }

  // Box-Muller, one draw per call (the second root is discarded to keep
  // the stream position independent of call parity).
  double gaussian(double mean = 0.0, double sigma = 1.0);

  template <typename T>
  void shuffle(T& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Derives an independent substream from a root seed and a name, e.g.
// substream(seed, "corpus") or substream(seed, "noise", screen_index).
// FNV-1a over the name folded into the SplitMix64 state.
std::uint64_t substream(std::uint64_t root_seed, std::string_view name, std::uint64_t index = 0);

// FNV-1a 64-bit digest, also used to fingerprint configs in output files.
std::uint64_t fnv1a64(std::string_view bytes);

std::string hex64(std::uint64_t v);

}  // namespace uihier
