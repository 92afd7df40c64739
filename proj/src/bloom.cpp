#include "bloommst/bloom.hpp"

#include <cmath>
#include <numbers>

#include "bloommst/error.hpp"
#include "bloommst/hash.hpp"

namespace bloommst {

BloomParams bloom_params(std::size_t capacity_n, double epsilon) {
  if (capacity_n < 1) throw ParameterError("bloom_params: capacity must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ParameterError("bloom_params: epsilon must lie in (0, 1)");

  const double ln2 = std::numbers::ln2;
  const double n = static_cast<double>(capacity_n);
  const double m = std::ceil(-n * std::log(epsilon) / (ln2 * ln2));

  BloomParams p;
  p.capacity_n = capacity_n;
  p.epsilon = epsilon;
  p.m_bits = m < 1.0 ? 1 : static_cast<std::size_t>(m);
  const double k = std::floor(static_cast<double>(p.m_bits) * ln2 / n + 0.5);
  p.k_hashes = k < 1.0 ? 1 : static_cast<std::size_t>(k);
  return p;
}

BloomFilter::BloomFilter(const BloomParams& params, std::uint64_t hash_seed)
    : params_(params), seed_(hash_seed), bits_(params.m_bits) {
  if (params.m_bits < 1 || params.k_hashes < 1)
    throw ParameterError("BloomFilter: m_bits and k_hashes must be at least 1");
}

template <typename Fn>
void BloomFilter::for_each_probe(std::uint64_t key, Fn&& fn) const noexcept {
  const auto h = hash_node_id(key, seed_);
  const std::uint64_t m = params_.m_bits;
  const std::uint64_t step = h.high % m;
  std::uint64_t idx = h.low % m;
  for (std::size_t i = 0; i < params_.k_hashes; ++i) {
    if (!fn(static_cast<std::size_t>(idx))) return;
    // idx, step < m, so idx + step cannot wrap.
    idx += step;
    if (idx >= m) idx -= m;
  }
}

void BloomFilter::add(std::uint64_t key) noexcept {
  bool fresh = false;
  for_each_probe(key, [&](std::size_t bit) {
    if (!bits_.test(bit)) {
      bits_.set(bit);
      fresh = true;
    }
    return true;
  });
  if (fresh) ++inserted_;
}

bool BloomFilter::contains(std::uint64_t key) const noexcept {
  bool all = true;
  for_each_probe(key, [&](std::size_t bit) {
    all = bits_.test(bit);
    return all;
  });
  return all;
}

}  // namespace bloommst
