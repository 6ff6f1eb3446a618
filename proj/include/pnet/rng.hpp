#ifndef PNET_RNG_HPP
#define PNET_RNG_HPP

#include <cstdint>

namespace pnet {

// SplitMix64 generator (Steele, Lea & Flood; public-domain reference
// implementation). Chosen because it is seedable, splittable into
// independent substreams, and produces identical output on every platform,
// which the sampling reproducibility contract depends on. Uniform doubles
// and bounded integers are derived here from the raw 64-bit output instead
// of <random> distributions, whose results are implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  // Substream derived from (seed, index); streams for distinct indices are
  // independent, so per-record sampling cannot depend on scheduling.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed + 0x9e3779b97f4a7c15ull * (index + 1)));
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0,1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0,n), n >= 1, by rejection (no modulo bias).
  std::uint64_t next_below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace pnet

#endif  // PNET_RNG_HPP
