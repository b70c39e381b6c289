#pragma once

#include <cstdint>
#include <random>

namespace lrcdec {

// Seedable generator with independent per-trial streams: stream(master, i)
// depends only on (master, i), so results do not depend on scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}
  static Rng stream(std::uint64_t master, std::uint64_t index) {
    return Rng(mix(master) ^ mix(index + 0x9e3779b97f4a7c15ULL));
  }

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [0, bound), bound > 0, by rejection sampling so the
  // output is identical on every standard library.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lrcdec
