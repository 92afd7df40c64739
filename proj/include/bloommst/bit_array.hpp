#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bloommst {

// Fixed-length bit array packed into 64-bit words. Bits past size() in the
// last word are always zero, so word-wise comparisons and popcounts are exact.
class BitArray {
public:
  BitArray() = default;
  explicit BitArray(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

  [[nodiscard]] bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Number of bytes needed to hold the bits, ceil(size / 8).
  [[nodiscard]] std::size_t payload_bytes() const noexcept { return (size_ + 7) / 8; }

  /// Count of bits set here and clear in `other`. Sizes must match.
  [[nodiscard]] std::size_t count_and_not(const BitArray& other) const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
    return n;
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto word = words_[w];
      while (word != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const BitArray&, const BitArray&) = default;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bloommst
