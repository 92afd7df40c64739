#include "bloommst/analysis.hpp"

#include <cmath>

#include "bloommst/error.hpp"

namespace bloommst {

FalsePositiveStats false_positive_stats(std::size_t n, std::size_t m_bits, double k) {
  if (n < 1 || m_bits < 1 || !(k > 0.0))
    throw ParameterError("false_positive_stats: n, m_bits and k must be positive");

  const double m = static_cast<double>(m_bits);
  FalsePositiveStats s;
  for (std::size_t i = 2; i <= n; ++i) {
    const double p = std::pow(-std::expm1(-k * static_cast<double>(i - 1) / m), k);
    s.expected_fp += p;
    s.variance_fp += p * (1.0 - p);
  }
  s.stddev_fp = std::sqrt(s.variance_fp);
  return s;
}

FalsePositiveStats false_positive_stats(std::size_t n, std::size_t m_bits, std::size_t k) {
  if (k < 1) throw ParameterError("false_positive_stats: k must be positive");
  return false_positive_stats(n, m_bits, static_cast<double>(k));
}

std::size_t incorrect_edge_count(const MstResult& baseline, const MstResult& bloom) {
  if (baseline.edge_bits.size() != bloom.edge_bits.size())
    throw ParameterError("edge_error_rate: results come from graphs of different size");
  return baseline.edge_bits.count_and_not(bloom.edge_bits);
}

double edge_error_rate(const MstResult& baseline, const MstResult& bloom) {
  const std::size_t missing = incorrect_edge_count(baseline, bloom);
  const std::size_t total = baseline.edge_bits.count();
  return total == 0 ? 0.0 : static_cast<double>(missing) / static_cast<double>(total);
}

std::size_t baseline_set_bytes(std::size_t inserted) {
  constexpr std::size_t kSlotBytes = 16;
  constexpr std::size_t kHeaderBytes = 216;
  constexpr std::size_t kFastGrowthLimit = 50'000;

  std::size_t capacity = 8;
  for (std::size_t used = 1; used <= inserted; ++used) {
    if (used * 5 < capacity * 3) continue;  // fill below ceil(3/5 capacity)
    const std::size_t target = used <= kFastGrowthLimit ? 4 * used : 2 * used;
    while (capacity < target) capacity *= 2;
  }
  return capacity * kSlotBytes + kHeaderBytes;
}

std::size_t bloom_variant_bytes(std::size_t m_bits, std::size_t edge_count) {
  return (m_bits + 7) / 8 + (edge_count + 7) / 8 + kBloomVariantOverheadBytes;
}

double reduction_percent(double baseline_bytes, double bloom_bytes) {
  if (baseline_bytes <= 0.0) return 0.0;
  return 100.0 * (1.0 - bloom_bytes / baseline_bytes);
}

MemoryReport memory_report(std::size_t visited_nodes, std::size_t m_bits, std::size_t edge_count) {
  MemoryReport r;
  r.baseline_bytes = baseline_set_bytes(visited_nodes);
  r.bloom_bytes = bloom_variant_bytes(m_bits, edge_count);
  r.reduction_percent =
      reduction_percent(static_cast<double>(r.baseline_bytes), static_cast<double>(r.bloom_bytes));
  return r;
}

}  // namespace bloommst
