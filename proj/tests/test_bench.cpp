#include <gtest/gtest.h>

#include <sstream>

#include "bloommst/bench.hpp"
#include "bloommst/error.hpp"

using namespace bloommst;

TEST(BenchTest, DegenerateTwoNodeGraph) {
  BenchConfig config;
  config.sizes = {2};
  config.runs = 1;
  const auto summary = run_bench(config);
  ASSERT_EQ(summary.records.size(), 1U);
  EXPECT_EQ(summary.records[0].error_percent, 0.0);
  EXPECT_EQ(summary.records[0].incorrect_edges, 0U);
  EXPECT_EQ(summary.runs[0].bloom_edges, 1U);
}

TEST(BenchTest, RejectsBadConfig) {
  BenchConfig config;
  EXPECT_THROW((void)run_bench(config), ParameterError);
  config.sizes = {1000};
  config.runs = 0;
  EXPECT_THROW((void)run_bench(config), ParameterError);
  config.runs = 1;
  config.sizes = {1};
  EXPECT_THROW((void)run_bench(config), ParameterError);
  config.sizes = {10};
  config.epsilon = 1.5;
  EXPECT_THROW((void)run_bench(config), ParameterError);
}

TEST(BenchTest, TrialSeedIsReproducible) {
  EXPECT_EQ(trial_seed(10, 1000, 3), 10U + 3U + 1'000'003ULL * 1000);
  BenchConfig config;
  config.seed = 42;
  const auto a = run_trial(1000, 2, config);
  const auto b = run_trial(1000, 2, config);
  EXPECT_EQ(a.graph_seed, b.graph_seed);
  EXPECT_EQ(a.baseline_cost, b.baseline_cost);
  EXPECT_EQ(a.bloom_cost, b.bloom_cost);
  EXPECT_EQ(a.incorrect_edges, b.incorrect_edges);
}

TEST(BenchTest, SummaryIndependentOfThreadCount) {
  BenchConfig config;
  config.sizes = {1000, 3000};
  config.runs = 3;
  config.threads = 1;
  const auto serial = run_bench(config);
  config.threads = 4;
  const auto parallel = run_bench(config);
  std::ostringstream a;
  std::ostringstream b;
  write_bench_csv(serial, a);
  write_bench_csv(parallel, b);
  EXPECT_EQ(a.str(), b.str());
  ASSERT_EQ(parallel.runs.size(), 6U);
  EXPECT_EQ(parallel.runs[0].node_count, 1000U);
  EXPECT_EQ(parallel.runs[5].run_index, 2U);
}

TEST(BenchTest, RecordsAreConsistent) {
  BenchConfig config;
  config.sizes = {1000};
  config.runs = 5;
  const auto summary = run_bench(config);
  const auto& rec = summary.records.at(0);
  EXPECT_DOUBLE_EQ(rec.baseline_bytes, 32'984.0);
  EXPECT_NEAR(rec.reduction_percent, 100.0 * (1.0 - rec.bloom_bytes / rec.baseline_bytes), 1e-12);
  EXPECT_DOUBLE_EQ(summary.average_reduction_percent, rec.reduction_percent);
  for (const auto& run : summary.runs) {
    EXPECT_EQ(run.baseline_edges, 999U);
    EXPECT_LE(run.bloom_edges, run.baseline_edges);
    EXPECT_EQ(run.bloom_edges + 1, run.bloom_spanned_nodes);
  }
}

TEST(BenchTest, CsvSchema) {
  BenchConfig config;
  config.sizes = {50, 60};
  config.runs = 2;
  std::ostringstream out;
  write_bench_csv(run_bench(config), out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line,
            "node_count,baseline_bytes,bloom_bytes,reduction_percent,incorrect_edges,expected_fp,"
            "stddev_fp,error_percent");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("50,", 0), 0U);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("60,", 0), 0U);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("average,,,", 0), 0U);
  EXPECT_FALSE(std::getline(in, line));
}

TEST(BenchTest, SizeLists) {
  EXPECT_EQ(default_bench_sizes(), (std::vector<std::size_t>{1000, 11000, 21000}));
  const auto full = full_bench_sizes();
  ASSERT_EQ(full.size(), 11U);
  EXPECT_EQ(full.front(), 1000U);
  EXPECT_EQ(full.back(), 101000U);
}
