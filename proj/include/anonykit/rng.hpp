#ifndef ANONYKIT_RNG_HPP
#define ANONYKIT_RNG_HPP

#include <cstdint>
#include <vector>

namespace anonykit {

// splitmix64 (Steele, Lea & Flood's SplittableRandom finalizer). Used instead
// of std::mt19937 + std::shuffle because its output is a short, well-known
// recurrence that can be reproduced bit-for-bit in any language, which keeps
// seeded experiment sweeps portable across toolchains.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound) by rejection; bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      const std::uint64_t v = next();
      if (v >= threshold) return v % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Fisher-Yates shuffle driven by splitmix64; the only shuffle used anywhere.
inline void fisher_yates(std::vector<int>& values, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(values[i - 1], values[j]);
  }
}

// Stable derivation of a per-task seed from a base seed and a salt (e.g. the
// k value of one sweep cell). Documented so external tooling can predict it:
// derived = splitmix64(seed XOR (salt * 0x9e3779b97f4a7c15)).next().
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return SplitMix64(seed ^ (salt * 0x9e3779b97f4a7c15ULL)).next();
}

}  // namespace anonykit

#endif  // ANONYKIT_RNG_HPP
