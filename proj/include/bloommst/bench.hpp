#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bloommst/analysis.hpp"
#include "bloommst/bloom.hpp"

namespace bloommst {

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t runs = 5;
  double epsilon = kDefaultEpsilon;
  std::uint64_t seed = 0;
  std::uint64_t hash_seed = kDefaultHashSeed;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

/// Sizes 1,000 to 21,000 step 10,000.
[[nodiscard]] std::vector<std::size_t> default_bench_sizes();
/// Sizes 1,000 to 101,000 step 10,000.
[[nodiscard]] std::vector<std::size_t> full_bench_sizes();

/// Graph seed of one trial: seed + run_index + 1,000,003 * node_count.
[[nodiscard]] std::uint64_t trial_seed(std::uint64_t seed, std::size_t node_count,
                                       std::size_t run_index) noexcept;

/// Both solvers on one freshly generated graph.
struct BenchRun {
  std::size_t node_count = 0;
  std::size_t run_index = 0;
  std::uint64_t graph_seed = 0;
  std::size_t edge_count = 0;
  double baseline_cost = 0.0;
  double bloom_cost = 0.0;
  std::size_t baseline_edges = 0;
  std::size_t bloom_edges = 0;
  std::size_t bloom_spanned_nodes = 0;
  std::size_t incorrect_edges = 0;
  double error_rate = 0.0;
  MemoryReport memory;
};

/// One row per graph size, averaged over its runs.
struct BenchRecord {
  std::size_t node_count = 0;
  double baseline_bytes = 0.0;
  double bloom_bytes = 0.0;
  double reduction_percent = 0.0;
  std::size_t incorrect_edges = 0;  // mean over runs, rounded half up
  double mean_incorrect_edges = 0.0;
  double expected_fp = 0.0;
  double stddev_fp = 0.0;
  double error_percent = 0.0;
};

struct BenchSummary {
  std::vector<BenchRecord> records;
  /// Sorted by (node_count, run_index).
  std::vector<BenchRun> runs;
  double average_reduction_percent = 0.0;
  double average_error_percent = 0.0;
};

[[nodiscard]] BenchRun run_trial(std::size_t node_count, std::size_t run_index,
                                 const BenchConfig& config);

/// Throws ParameterError on an empty size list, a size below 2, or zero runs.
[[nodiscard]] BenchSummary run_bench(const BenchConfig& config);

/// Header row, one row per record, then an "average" row carrying the mean
/// reduction and error percentages.
void write_bench_csv(const BenchSummary& summary, std::ostream& out);

/// Fixed-width table in the same column order.
void write_bench_table(const BenchSummary& summary, std::ostream& out);

}  // namespace bloommst
