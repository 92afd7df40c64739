#include "bloommst/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "bloommst/error.hpp"
#include "bloommst/graph.hpp"
#include "bloommst/mst.hpp"

namespace bloommst {

std::vector<std::size_t> default_bench_sizes() { return {1'000, 11'000, 21'000}; }

std::vector<std::size_t> full_bench_sizes() {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 1'000; n <= 101'000; n += 10'000) sizes.push_back(n);
  return sizes;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t node_count, std::size_t run_index) noexcept {
  return seed + run_index + 1'000'003ULL * node_count;
}

BenchRun run_trial(std::size_t node_count, std::size_t run_index, const BenchConfig& config) {
  BenchRun run;
  run.node_count = node_count;
  run.run_index = run_index;
  run.graph_seed = trial_seed(config.seed, node_count, run_index);

  GeneratorConfig gen;
  gen.node_count = node_count;
  gen.seed = run.graph_seed;
  const Graph g = generate_graph(gen);
  run.edge_count = g.edge_count();

  const MstResult exact = prim_baseline(g, 0);
  const MstResult approx = prim_bloom(g, 0, config.epsilon, config.hash_seed);

  run.baseline_cost = exact.total_cost;
  run.bloom_cost = approx.total_cost;
  run.baseline_edges = exact.selected_edge_count;
  run.bloom_edges = approx.selected_edge_count;
  run.bloom_spanned_nodes = approx.spanned_node_count;
  run.incorrect_edges = incorrect_edge_count(exact, approx);
  run.error_rate = edge_error_rate(exact, approx);

  const BloomParams params = bloom_params(node_count, config.epsilon);
  run.memory = memory_report(exact.spanned_node_count, params.m_bits, g.edge_count());
  return run;
}

namespace {

std::vector<BenchRun> run_all_trials(const BenchConfig& config) {
  struct Task {
    std::size_t size;
    std::size_t run;
  };
  std::vector<Task> tasks;
  for (auto size : config.sizes)
    for (std::size_t r = 0; r < config.runs; ++r) tasks.push_back({size, r});

  std::vector<BenchRun> runs(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        runs[i] = run_trial(tasks[i].size, tasks[i].run, config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  std::size_t threads = config.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, tasks.size());
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  std::sort(runs.begin(), runs.end(), [](const BenchRun& a, const BenchRun& b) {
    return std::tie(a.node_count, a.run_index) < std::tie(b.node_count, b.run_index);
  });
  return runs;
}

}  // namespace

BenchSummary run_bench(const BenchConfig& config) {
  if (config.sizes.empty()) throw ParameterError("bench: no graph sizes given");
  if (config.runs < 1) throw ParameterError("bench: runs must be at least 1");
  for (auto size : config.sizes)
    if (size < 2) throw ParameterError("bench: graph sizes must be at least 2");
  // Validates epsilon before any work starts.
  (void)bloom_params(1, config.epsilon);

  BenchSummary summary;
  summary.runs = run_all_trials(config);

  auto begin = summary.runs.begin();
  while (begin != summary.runs.end()) {
    const std::size_t n = begin->node_count;
    auto end = std::find_if(begin, summary.runs.end(),
                            [n](const BenchRun& r) { return r.node_count != n; });
    const double count = static_cast<double>(end - begin);

    BenchRecord rec;
    rec.node_count = n;
    double incorrect = 0.0;
    double error = 0.0;
    for (auto it = begin; it != end; ++it) {
      rec.baseline_bytes += static_cast<double>(it->memory.baseline_bytes);
      rec.bloom_bytes += static_cast<double>(it->memory.bloom_bytes);
      incorrect += static_cast<double>(it->incorrect_edges);
      error += it->error_rate;
    }
    rec.baseline_bytes /= count;
    rec.bloom_bytes /= count;
    rec.reduction_percent = reduction_percent(rec.baseline_bytes, rec.bloom_bytes);
    rec.mean_incorrect_edges = incorrect / count;
    rec.incorrect_edges = static_cast<std::size_t>(std::floor(rec.mean_incorrect_edges + 0.5));
    rec.error_percent = 100.0 * error / count;

    const BloomParams params = bloom_params(n, config.epsilon);
    const FalsePositiveStats stats = false_positive_stats(n, params.m_bits, params.k_hashes);
    rec.expected_fp = stats.expected_fp;
    rec.stddev_fp = stats.stddev_fp;

    summary.records.push_back(rec);
    begin = end;
  }

  for (const auto& rec : summary.records) {
    summary.average_reduction_percent += rec.reduction_percent;
    summary.average_error_percent += rec.error_percent;
  }
  const double rows = static_cast<double>(summary.records.size());
  summary.average_reduction_percent /= rows;
  summary.average_error_percent /= rows;
  return summary;
}

void write_bench_csv(const BenchSummary& summary, std::ostream& out) {
  out << "node_count,baseline_bytes,bloom_bytes,reduction_percent,incorrect_edges,expected_fp,"
         "stddev_fp,error_percent\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::fixed;
  for (const auto& r : summary.records) {
    out << r.node_count << ',' << std::setprecision(0) << r.baseline_bytes << ',' << r.bloom_bytes
        << ',' << std::setprecision(2) << r.reduction_percent << ',' << r.incorrect_edges << ','
        << r.expected_fp << ',' << r.stddev_fp << ',' << std::setprecision(3) << r.error_percent
        << '\n';
  }
  out << "average,,," << std::setprecision(2) << summary.average_reduction_percent << ",,,,"
      << std::setprecision(3) << summary.average_error_percent << '\n';
  out.flags(flags);
  out.precision(precision);
}

void write_bench_table(const BenchSummary& summary, std::ostream& out) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::left << std::setw(10) << "nodes" << std::right << std::setw(16) << "baseline B"
      << std::setw(12) << "bloom B" << std::setw(11) << "reduction" << std::setw(11) << "incorrect"
      << std::setw(9) << "mu_X" << std::setw(9) << "sigma_X" << std::setw(9) << "error" << '\n';
  out << std::fixed;
  for (const auto& r : summary.records) {
    out << std::left << std::setw(10) << r.node_count << std::right << std::setprecision(0)
        << std::setw(16) << r.baseline_bytes << std::setw(12) << r.bloom_bytes
        << std::setprecision(2) << std::setw(10) << r.reduction_percent << '%' << std::setw(11)
        << r.incorrect_edges << std::setw(9) << r.expected_fp << std::setw(9) << r.stddev_fp
        << std::setprecision(3) << std::setw(8) << r.error_percent << "%\n";
  }
  out << std::left << std::setw(10) << "average" << std::right << std::setw(16) << "" << std::setw(12)
      << "" << std::setprecision(2) << std::setw(10) << summary.average_reduction_percent << '%'
      << std::setw(11) << "" << std::setw(9) << "" << std::setw(9) << "" << std::setprecision(3)
      << std::setw(8) << summary.average_error_percent << "%\n";
  out.flags(flags);
  out.precision(precision);
}

}  // namespace bloommst
