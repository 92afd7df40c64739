#pragma once

#include <cstddef>

#include "bloommst/mst.hpp"

namespace bloommst {

/// Mean and spread of the number of full hash collisions X over n insertions.
struct FalsePositiveStats {
  double expected_fp = 0.0;
  double variance_fp = 0.0;
  double stddev_fp = 0.0;
};

/// X = sum over insertions i = 2..n of indicators with
/// p_i = (1 - exp(-k (i - 1) / m))^k, treated as independent:
/// E[X] = sum p_i, Var[X] = sum p_i (1 - p_i).
/// Throws ParameterError if any argument is zero.
[[nodiscard]] FalsePositiveStats false_positive_stats(std::size_t n, std::size_t m_bits,
                                                      std::size_t k);

/// Same sum with a fractional hash count, for comparing rounding choices.
[[nodiscard]] FalsePositiveStats false_positive_stats(std::size_t n, std::size_t m_bits, double k);

/// Fraction of baseline tree edges missing from the Bloom result,
/// |T \ T'| / |T|. Zero when the baseline selected nothing.
[[nodiscard]] double edge_error_rate(const MstResult& baseline, const MstResult& bloom);

/// |T \ T'| as an edge count.
[[nodiscard]] std::size_t incorrect_edge_count(const MstResult& baseline, const MstResult& bloom);

/// Bytes of a dynamically grown hash set holding `inserted` node ids. Models a
/// table with 16-byte slots and a 216-byte header: 8 slots initially, and once
/// the fill reaches ceil(3/5 capacity) it grows to the smallest power of two
/// >= 4 * used (or 2 * used above 50,000 entries).
[[nodiscard]] std::size_t baseline_set_bytes(std::size_t inserted);

inline constexpr std::size_t kBloomVariantOverheadBytes = 120;

/// ceil(m_bits / 8) + ceil(edge_count / 8) + fixed container overhead.
[[nodiscard]] std::size_t bloom_variant_bytes(std::size_t m_bits, std::size_t edge_count);

struct MemoryReport {
  std::size_t baseline_bytes = 0;
  std::size_t bloom_bytes = 0;
  double reduction_percent = 0.0;
};

/// 100 * (1 - bloom / baseline); zero when baseline_bytes is zero.
[[nodiscard]] double reduction_percent(double baseline_bytes, double bloom_bytes);

[[nodiscard]] MemoryReport memory_report(std::size_t visited_nodes, std::size_t m_bits,
                                         std::size_t edge_count);

}  // namespace bloommst
