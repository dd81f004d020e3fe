#pragma once

// Reproducible random streams shared by the Monte Carlo estimator and the
// packet simulator.
//
// Splitting rule: trials are grouped into fixed blocks of kTrialsPerStream.
// Block b draws from a SplitMix64 stream seeded with
// splitmix64(seed ^ b), so results depend only on (seed, trials), never on
// how many workers pick up the blocks.

#include <cstdint>

namespace graphcode {

inline constexpr std::uint64_t kTrialsPerStream = 1U << 16;

[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream) noexcept
      : state_(splitmix64(seed ^ stream)) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// True with probability p; exact at p = 0 and p = 1.
  bool bernoulli(double p) noexcept { return uniform() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace graphcode
