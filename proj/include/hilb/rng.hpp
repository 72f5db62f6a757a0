#pragma once

#include <cstdint>

namespace hilb {

// splitmix64: the output mixer from Steele, Lea and Flood's SplittableRandom.
// Chosen for reproducibility: the stream is fully specified by the seed and
// identical on every platform, unlike std::mt19937 distributions.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr const char* id() { return "splitmix64"; }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform over [0, n) by rejection; n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t zone = ~0ull / n * n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= zone);
    return x % n;
  }

  // Uniform over [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::uint64_t state_;
};

}  // namespace hilb
