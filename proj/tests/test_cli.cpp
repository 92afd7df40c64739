#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "bloommst/cli.hpp"
#include "bloommst/graph.hpp"
#include "bloommst/segmentation.hpp"

using namespace bloommst;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "bloommst");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("bloommst_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, GenThenMstIsDeterministic) {
  ASSERT_EQ(run({"gen", "--nodes", "1000", "--seed", "7", "--out", path("g.txt")}).code, 0);
  const auto first = run({"mst", path("g.txt"), "--solver", "baseline"});
  const auto second = run({"mst", path("g.txt"), "--solver", "baseline"});
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_NE(first.out.find("edges=999"), std::string::npos);
  EXPECT_NE(first.out.find("spanned_nodes=1000"), std::string::npos);

  const auto gen_stdout = run({"gen", "--nodes", "1000", "--seed", "7"});
  EXPECT_EQ(gen_stdout.out, slurp(path("g.txt")));
}

TEST_F(CliTest, BloomCompareReportsCostRelation) {
  ASSERT_EQ(run({"gen", "--nodes", "2000", "--seed", "3", "--out", path("g.txt")}).code, 0);
  const auto r = run({"mst", path("g.txt"), "--solver", "bloom", "--epsilon", "0.01", "--compare",
                      "--out", path("edges.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("bloom: cost="), std::string::npos);
  EXPECT_NE(r.out.find("baseline: cost="), std::string::npos);
  EXPECT_NE(r.out.find("bloom_cost_le_baseline=yes"), std::string::npos);
  const std::string edges = slurp(path("edges.txt"));
  EXPECT_GT(std::count(edges.begin(), edges.end(), '\n'), 1900);
}

TEST_F(CliTest, SegmentUniformWhite) {
  {
    std::ofstream f(path("white.ppm"), std::ios::binary);
    save_ppm(PixelImage{2, 2, std::vector<Rgb>(4, Rgb{255, 255, 255})}, f);
  }
  const auto r = run({"segment", path("white.ppm"), "--threshold", "100", "--out", path("labels.ppm")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "label_count=1\n");
  EXPECT_EQ(slurp(path("labels.ppm.txt")), "label_count=1\n");
  std::ifstream labels(path("labels.ppm"), std::ios::binary);
  EXPECT_EQ(load_ppm(labels).width, 2U);
}

TEST_F(CliTest, StatsReport) {
  const auto r = run({"stats", "--nodes", "1000", "--epsilon", "0.01"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("m_bits=9586\n"), std::string::npos);
  EXPECT_NE(r.out.find("k_hashes=7\n"), std::string::npos);
  EXPECT_NE(r.out.find("mu_X=1.66\n"), std::string::npos);

  const auto truncated = run({"stats", "--nodes", "51000", "--k", "6"});
  EXPECT_NE(truncated.out.find("mu_X=93.27\nsigma_X=9.63\n"), std::string::npos);

  const auto one = run({"stats", "--nodes", "1"});
  EXPECT_NE(one.out.find("mu_X=0.00\nsigma_X=0.00\n"), std::string::npos);
}

TEST_F(CliTest, BenchWritesCsv) {
  const auto r = run({"bench", "--sizes", "200,300", "--runs", "2", "--out", path("b.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = slurp(path("b.csv"));
  EXPECT_EQ(csv.rfind("node_count,", 0), 0U);
  EXPECT_NE(csv.find("\n200,"), std::string::npos);
  EXPECT_NE(csv.find("\naverage,"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"gen", "--nodes", "1"}).code, 1);
  EXPECT_EQ(run({"mst", path("g.txt"), "--solver", "greedy"}).code, 1);
  EXPECT_EQ(run({"stats", "--epsilon", "2"}).code, 1);
  EXPECT_EQ(run({"bench", "--sizes", "1"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);

  const auto missing = run({"mst", path("does_not_exist.txt")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);

  {
    std::ofstream f(path("bad.txt"));
    f << "2 1\n0 0 1.0\n";
  }
  const auto bad = run({"mst", path("bad.txt")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);

  {
    std::ofstream f(path("bad.ppm"));
    f << "P6\n1 1\n65535\n";
  }
  EXPECT_EQ(run({"segment", path("bad.ppm")}).code, 2);
}
