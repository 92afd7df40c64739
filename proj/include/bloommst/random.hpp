#pragma once

#include <cstdint>
#include <random>

namespace bloommst {

// Seeded 64-bit source with fully specified output mappings. The engine is
// std::mt19937_64, whose sequence is fixed by the standard; the std::
// distributions are not, so integer and real draws are mapped here.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound) by rejection of the biased tail. bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= limit) return x % bound;
    }
  }

  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  /// Uniform real in [0, 1) with 53 random mantissa bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

}  // namespace bloommst
