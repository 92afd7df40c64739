#pragma once

#include <cstdint>
#include <span>

namespace bloommst {

struct Hash128 {
  std::uint64_t low;
  std::uint64_t high;
  friend bool operator==(const Hash128&, const Hash128&) = default;
};

/// MurmurHash3_x64_128. Both internal lanes start at `seed`; for seeds below
/// 2^32 the output matches the reference implementation bit for bit.
[[nodiscard]] Hash128 murmur3_x64_128(std::span<const std::uint8_t> data, std::uint64_t seed) noexcept;

/// Hash of a node identifier serialised as 8 little-endian bytes.
[[nodiscard]] Hash128 hash_node_id(std::uint64_t key, std::uint64_t seed) noexcept;

}  // namespace bloommst
