#include <gtest/gtest.h>

#include <array>
#include <cstring>
#include <vector>

#include "bloommst/hash.hpp"

using namespace bloommst;

// SMHasher's VerificationTest: hash keys {0}, {0,1}, ... of lengths 0..255
// with seed 256 - len, then hash the concatenated digests with seed 0.
TEST(Murmur3Test, SmhasherVerificationValue) {
  std::vector<std::uint8_t> key(256);
  std::vector<std::uint8_t> digests(256 * 16);
  for (std::size_t len = 0; len < 256; ++len) {
    key[len] = static_cast<std::uint8_t>(len);
    const auto h = murmur3_x64_128(std::span(key.data(), len), 256 - len);
    for (int b = 0; b < 8; ++b) {
      digests[len * 16 + b] = static_cast<std::uint8_t>(h.low >> (8 * b));
      digests[len * 16 + 8 + b] = static_cast<std::uint8_t>(h.high >> (8 * b));
    }
  }
  const auto final_hash = murmur3_x64_128(digests, 0);
  EXPECT_EQ(static_cast<std::uint32_t>(final_hash.low), 0x6384BA69U);
}

TEST(Murmur3Test, EmptyInputSeedZeroIsZero) {
  const auto h = murmur3_x64_128({}, 0);
  EXPECT_EQ(h.low, 0U);
  EXPECT_EQ(h.high, 0U);
}

TEST(Murmur3Test, NodeIdUsesLittleEndianBytes) {
  const std::uint64_t key = 0x0102030405060708ULL;
  const std::array<std::uint8_t, 8> le{8, 7, 6, 5, 4, 3, 2, 1};
  EXPECT_EQ(hash_node_id(key, 17), murmur3_x64_128(le, 17));
  EXPECT_NE(hash_node_id(key, 17), hash_node_id(key, 18));
}
