#pragma once

#include <cstddef>
#include <cstdint>

#include "bloommst/bit_array.hpp"

namespace bloommst {

/// Sizing of a Bloom filter for an expected number of insertions and a
/// target false-positive rate.
struct BloomParams {
  std::size_t capacity_n = 0;
  double epsilon = 0.0;
  std::size_t m_bits = 0;
  std::size_t k_hashes = 0;

  friend bool operator==(const BloomParams&, const BloomParams&) = default;
};

/// m = ceil(-n ln(eps) / ln(2)^2), k = round_half_up(m ln(2) / n), k >= 1.
/// Throws ParameterError unless capacity_n >= 1 and 0 < epsilon < 1.
[[nodiscard]] BloomParams bloom_params(std::size_t capacity_n, double epsilon);

inline constexpr double kDefaultEpsilon = 0.01;
inline constexpr std::uint64_t kDefaultHashSeed = 0;

// Bloom filter over 64-bit node identifiers. Probe positions come from double
// hashing of a seeded MurmurHash3_x64_128 digest of the key's 8 little-endian
// bytes: idx_i = (h1 + i * h2) mod m for i in [0, k).
//
// Single writer; concurrent contains() is fine once writes are finished.
class BloomFilter {
public:
  explicit BloomFilter(const BloomParams& params, std::uint64_t hash_seed = kDefaultHashSeed);

  void add(std::uint64_t key) noexcept;
  [[nodiscard]] bool contains(std::uint64_t key) const noexcept;

  [[nodiscard]] const BloomParams& params() const noexcept { return params_; }
  [[nodiscard]] std::uint64_t hash_seed() const noexcept { return seed_; }
  [[nodiscard]] const BitArray& bits() const noexcept { return bits_; }
  /// add() calls for keys that did not already test positive.
  [[nodiscard]] std::size_t inserted_count() const noexcept { return inserted_; }
  /// ceil(m_bits / 8)
  [[nodiscard]] std::size_t payload_bytes() const noexcept { return bits_.payload_bytes(); }

private:
  template <typename Fn>
  void for_each_probe(std::uint64_t key, Fn&& fn) const noexcept;

  BloomParams params_;
  std::uint64_t seed_;
  BitArray bits_;
  std::size_t inserted_ = 0;
};

}  // namespace bloommst
