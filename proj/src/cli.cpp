#include "bloommst/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bloommst/analysis.hpp"
#include "bloommst/bench.hpp"
#include "bloommst/error.hpp"
#include "bloommst/graph.hpp"
#include "bloommst/mst.hpp"
#include "bloommst/segmentation.hpp"

namespace bloommst {
namespace {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

// Writes to `path`, or to `fallback` when path is empty or "-".
template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn,
                 std::ios::openmode mode = std::ios::out) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  auto file = open_out(path, mode);
  fn(file);
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

struct GenArgs {
  std::size_t nodes = 1000;
  std::uint64_t seed = 0;
  std::size_t min_extra = 1;
  std::size_t max_extra = 25;
  std::string out;
};

struct MstArgs {
  std::string input = "-";
  std::string solver = "baseline";
  double epsilon = kDefaultEpsilon;
  std::uint64_t hash_seed = kDefaultHashSeed;
  NodeId start = 0;
  bool compare = false;
  std::string out;
};

struct BenchArgs {
  std::vector<std::size_t> sizes;
  bool full = false;
  std::size_t runs = 5;
  double epsilon = kDefaultEpsilon;
  std::uint64_t seed = 0;
  std::uint64_t hash_seed = kDefaultHashSeed;
  std::size_t threads = 0;
  bool table = false;
  std::string out;
};

struct StatsArgs {
  std::size_t nodes = 1000;
  double epsilon = kDefaultEpsilon;
  std::size_t k = 0;
};

struct SegmentArgs {
  std::string input;
  double threshold = kDefaultThreshold;
  std::string solver = "baseline";
  double epsilon = kDefaultEpsilon;
  std::uint64_t hash_seed = kDefaultHashSeed;
  std::uint64_t palette_seed = 0;
  std::string out;
  std::string count_out;
};

void print_result(const char* name, const MstResult& r, std::ostream& out) {
  out << name << ": cost=" << std::setprecision(17) << r.total_cost
      << " edges=" << r.selected_edge_count << " spanned_nodes=" << r.spanned_node_count << '\n';
}

Graph read_graph(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return load_graph(stdin_stream);
  auto in = open_in(path);
  return load_graph(in);
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  GeneratorConfig config;
  config.node_count = a.nodes;
  config.seed = a.seed;
  config.min_extra_edges_per_node = a.min_extra;
  config.max_extra_edges_per_node = a.max_extra;
  const Graph g = generate_graph(config);
  with_output(a.out, out, [&](std::ostream& o) { save_graph(g, o); });
  return kExitOk;
}

int cmd_mst(const MstArgs& a, std::ostream& out) {
  const Graph g = read_graph(a.input, std::cin);
  const bool bloom = a.solver == "bloom";
  const MstResult result =
      bloom ? prim_bloom(g, a.start, a.epsilon, a.hash_seed) : prim_baseline(g, a.start);
  print_result(a.solver.c_str(), result, out);

  if (a.compare) {
    const MstResult other =
        bloom ? prim_baseline(g, a.start) : prim_bloom(g, a.start, a.epsilon, a.hash_seed);
    print_result(bloom ? "baseline" : "bloom", other, out);
    const MstResult& exact = bloom ? other : result;
    const MstResult& approx = bloom ? result : other;
    out << "incorrect_edges=" << incorrect_edge_count(exact, approx)
        << " error_percent=" << std::setprecision(4) << 100.0 * edge_error_rate(exact, approx)
        << " bloom_cost_le_baseline=" << (approx.total_cost <= exact.total_cost ? "yes" : "no")
        << '\n';
  }

  if (!a.out.empty()) {
    with_output(a.out, out, [&](std::ostream& o) {
      char buf[64];
      for (const auto& e : recover_edges(result, g)) {
        auto res = std::to_chars(buf, buf + sizeof buf, e.weight);
        o << e.u << ' ' << e.v << ' '
          << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << '\n';
      }
    });
  }
  return kExitOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  config.sizes = !a.sizes.empty() ? a.sizes : (a.full ? full_bench_sizes() : default_bench_sizes());
  config.runs = a.runs;
  config.epsilon = a.epsilon;
  config.seed = a.seed;
  config.hash_seed = a.hash_seed;
  config.threads = a.threads;
  const BenchSummary summary = run_bench(config);
  with_output(a.out, out, [&](std::ostream& o) { write_bench_csv(summary, o); });
  if (a.table) write_bench_table(summary, err);
  return kExitOk;
}

int cmd_segment(const SegmentArgs& a, std::ostream& out) {
  PixelImage img;
  {
    auto in = open_in(a.input, std::ios::in | std::ios::binary);
    img = load_ppm(in);
  }
  SolverChoice solver = BaselineSolver{};
  if (a.solver == "bloom") solver = BloomSolver{a.epsilon, a.hash_seed};
  const SegmentationResult seg = segment(img, a.threshold, solver);

  if (!a.out.empty()) {
    const std::string count_path = a.count_out.empty() ? a.out + ".txt" : a.count_out;
    auto image_file = open_out(a.out, std::ios::out | std::ios::binary);
    auto count_file = open_out(count_path);
    save_labels(seg, image_file, count_file, a.palette_seed);
    image_file.flush();
    count_file.flush();
    if (!image_file || !count_file) throw IoError("writing segmentation output failed");
  }
  out << "label_count=" << seg.cluster_count << '\n';
  return kExitOk;
}

}  // namespace

void write_stats_report(std::size_t n, double epsilon, std::size_t k_override, std::ostream& out) {
  const BloomParams p = bloom_params(n, epsilon);
  const std::size_t k = k_override == 0 ? p.k_hashes : k_override;
  const FalsePositiveStats s = false_positive_stats(n, p.m_bits, k);
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "n=" << n << '\n'
      << "epsilon=" << epsilon << '\n'
      << "m_bits=" << p.m_bits << '\n'
      << "k_hashes=" << k << '\n'
      << std::fixed << std::setprecision(2) << "mu_X=" << s.expected_fp << '\n'
      << "sigma_X=" << s.stddev_fp << '\n';
  out.flags(flags);
  out.precision(precision);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum spanning trees with a Bloom-filter visited set"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random connected graph");
  gen_cmd->add_option("--nodes", gen.nodes, "Number of nodes")->check(CLI::Range(2UL, 1UL << 30));
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--min-extra", gen.min_extra, "Minimum extra edges drawn per node");
  gen_cmd->add_option("--max-extra", gen.max_extra, "Maximum extra edges drawn per node");
  gen_cmd->add_option("--out", gen.out, "Output graph file (default stdout)");

  MstArgs mst;
  auto* mst_cmd = app.add_subcommand("mst", "Run an MST solver on a graph file");
  mst_cmd->add_option("input", mst.input, "Graph file, '-' for stdin");
  mst_cmd->add_option("--solver", mst.solver, "baseline or bloom")
      ->check(CLI::IsMember({"baseline", "bloom"}));
  mst_cmd->add_option("--epsilon", mst.epsilon, "Bloom filter false-positive rate");
  mst_cmd->add_option("--hash-seed", mst.hash_seed, "Bloom filter hash seed");
  mst_cmd->add_option("--start", mst.start, "Start node");
  mst_cmd->add_flag("--compare", mst.compare, "Also run the other solver and report the difference");
  mst_cmd->add_option("--out", mst.out, "Write the recovered edge list here");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand(
      "bench",
      "Run both solvers over a sweep of graph sizes and print one CSV row per size.\n"
      "Each run regenerates the graph with seed = --seed + run_index + 1000003 * nodes.");
  bench_cmd->add_option("--sizes", bench.sizes, "Graph sizes (default 1000,11000,21000)")
      ->delimiter(',');
  bench_cmd->add_flag("--full", bench.full, "Sweep 1,000 to 101,000 nodes in steps of 10,000");
  bench_cmd->add_option("--runs", bench.runs, "Runs per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--epsilon", bench.epsilon, "Bloom filter false-positive rate");
  bench_cmd->add_option("--seed", bench.seed, "Base graph seed");
  bench_cmd->add_option("--hash-seed", bench.hash_seed, "Bloom filter hash seed");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (0 = all cores)");
  bench_cmd->add_flag("--table", bench.table, "Also print a table to stderr");
  bench_cmd->add_option("--out", bench.out, "CSV output file (default stdout)");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Filter parameters and expected false positives");
  stats_cmd->add_option("--nodes", stats.nodes, "Number of insertions")->check(CLI::PositiveNumber);
  stats_cmd->add_option("--epsilon", stats.epsilon, "Target false-positive rate");
  stats_cmd->add_option("--k", stats.k, "Override the number of hash functions");

  SegmentArgs seg;
  auto* seg_cmd = app.add_subcommand("segment", "Segment a PPM image by MST thresholding");
  seg_cmd->add_option("input", seg.input, "Input pixmap (P6 or P3, maxval 255)")->required();
  seg_cmd->add_option("--threshold", seg.threshold, "Drop tree edges heavier than this")
      ->check(CLI::NonNegativeNumber);
  seg_cmd->add_option("--solver", seg.solver, "baseline or bloom")
      ->check(CLI::IsMember({"baseline", "bloom"}));
  seg_cmd->add_option("--epsilon", seg.epsilon, "Bloom filter false-positive rate");
  seg_cmd->add_option("--hash-seed", seg.hash_seed, "Bloom filter hash seed");
  seg_cmd->add_option("--palette-seed", seg.palette_seed, "Seed for label colours");
  seg_cmd->add_option("--out", seg.out, "Label image (P6); count goes to <out>.txt");
  seg_cmd->add_option("--count-out", seg.count_out, "Label count file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*mst_cmd) return cmd_mst(mst, out);
    if (*bench_cmd) return cmd_bench(bench, out, err);
    if (*stats_cmd) {
      write_stats_report(stats.nodes, stats.epsilon, stats.k, out);
      return kExitOk;
    }
    if (*seg_cmd) return cmd_segment(seg, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace bloommst
