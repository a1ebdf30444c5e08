#pragma once

#include <cstdint>

namespace mdst {

// Deterministic 64-bit generator (splitmix64). Every randomized routine in
// the project draws from this type so runs are reproducible across
// platforms; std::mt19937 and the std distributions are deliberately not
// used because their outputs are not pinned down by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) via Lemire's multiply-shift reduction.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) return 0;
    while (true) {
      std::uint64_t x = next_u64();
      unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= bound) return static_cast<std::uint64_t>(m >> 64);
      // Reject the biased low slice.
      std::uint64_t threshold = (0 - bound) % bound;
      if (lo >= threshold) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace mdst
