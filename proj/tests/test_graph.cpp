#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "bloommst/error.hpp"
#include "bloommst/graph.hpp"

using namespace bloommst;

namespace {

Graph triangle() {
  return Graph::from_edges(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}});
}

std::string serialise(const Graph& g) {
  std::ostringstream os;
  save_graph(g, os);
  return os.str();
}

Graph parse(const std::string& text) {
  std::istringstream is(text);
  return load_graph(is);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return 0;
}

}  // namespace

TEST(GraphTest, AdjacencyMirrorsEdges) {
  const Graph g = triangle();
  EXPECT_EQ(g.node_count(), 3U);
  EXPECT_EQ(g.edge_count(), 3U);
  ASSERT_EQ(g.neighbors(1).size(), 2U);
  for (NodeId u = 0; u < 3; ++u) {
    for (const auto& nb : g.neighbors(u)) {
      const auto& e = g.edge(nb.edge);
      EXPECT_TRUE((e.u == u && e.v == nb.node) || (e.v == u && e.u == nb.node));
      EXPECT_EQ(e.weight, nb.weight);
    }
  }
}

TEST(GraphTest, FromEdgesNormalisesAndValidates) {
  const Graph g = Graph::from_edges(2, {{1, 0, 0.25}});
  EXPECT_EQ(g.edge(0).u, 0U);
  EXPECT_EQ(g.edge(0).v, 1U);
  EXPECT_THROW((void)Graph::from_edges(2, {{0, 0, 1.0}}), ParameterError);
  EXPECT_THROW((void)Graph::from_edges(2, {{0, 2, 1.0}}), ParameterError);
  EXPECT_THROW((void)Graph::from_edges(2, {{0, 1, -1.0}}), ParameterError);
  EXPECT_THROW((void)Graph::from_edges(3, {{0, 1, 1.0}, {1, 0, 2.0}}), ParameterError);
}

TEST(GeneratorTest, TwoNodesGiveOneEdge) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_graph({2, 1, 25, seed});
    EXPECT_EQ(g.edge_count(), 1U);
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(GeneratorTest, RejectsBadConfig) {
  EXPECT_THROW((void)generate_graph({1, 1, 25, 0}), ParameterError);
  EXPECT_THROW((void)generate_graph({10, 0, 25, 0}), ParameterError);
  EXPECT_THROW((void)generate_graph({10, 5, 4, 0}), ParameterError);
}

TEST(GeneratorTest, SameSeedSameBytes) {
  EXPECT_EQ(serialise(generate_graph({500, 1, 25, 7})), serialise(generate_graph({500, 1, 25, 7})));
  EXPECT_NE(serialise(generate_graph({500, 1, 25, 7})), serialise(generate_graph({500, 1, 25, 8})));
}

TEST(GeneratorTest, HundredSeedsConnectedWithExpectedDensity) {
  double total_edges = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = generate_graph({1000, 1, 25, seed});
    ASSERT_TRUE(is_connected(g)) << "seed " << seed;
    EXPECT_GE(g.edge_count(), 999U);
    EXPECT_LE(g.edge_count(), 1000U * 25 + 999);
    for (const auto& e : g.edges()) {
      ASSERT_GE(e.weight, 0.0);
      ASSERT_LT(e.weight, 1.0);
    }
    total_edges += static_cast<double>(g.edge_count());
  }
  // 999 backbone edges plus 13 draws per node on average, less the few
  // draws that hit the node itself or an existing pair.
  const double mean = total_edges / 100.0;
  EXPECT_GT(mean, 13'000.0);
  EXPECT_LT(mean, 14'000.0);
}

TEST(GeneratorTest, EveryEdgeIdAppearsExactlyTwice) {
  const Graph g = generate_graph({2000, 1, 25, 11});
  std::vector<int> seen(g.edge_count(), 0);
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (const auto& nb : g.neighbors(u)) ++seen[nb.edge];
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 2; }));
}

TEST(GeneratorTest, NoSelfLoopsOrDuplicates) {
  const Graph g = generate_graph({3000, 1, 25, 5});
  std::set<std::pair<NodeId, NodeId>> pairs;
  for (const auto& e : g.edges()) {
    EXPECT_LT(e.u, e.v);
    EXPECT_TRUE(pairs.insert({e.u, e.v}).second);
  }
}

TEST(ConnectivityTest, Examples) {
  EXPECT_TRUE(is_connected(triangle()));
  EXPECT_FALSE(is_connected(Graph::from_edges(2, {})));
  EXPECT_FALSE(is_connected(Graph::from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}})));
  EXPECT_TRUE(is_connected(Graph::from_edges(1, {})));
}

TEST(GraphIoTest, LoadsMinimalFile) {
  const Graph g = parse("2 1\n0 1 0.5\n");
  EXPECT_EQ(g.node_count(), 2U);
  EXPECT_EQ(g.edge_count(), 1U);
  EXPECT_EQ(g.edge(0).weight, 0.5);
}

TEST(GraphIoTest, EdgeIdsFollowLineOrder) {
  const Graph g = parse("4 3\n2 3 0.1\n0 1 0.2\n1 2 0.3\n");
  EXPECT_EQ(g.edge(0), (Edge{2, 3, 0.1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 1, 0.2}));
  EXPECT_EQ(g.edge(2), (Edge{1, 2, 0.3}));
}

TEST(GraphIoTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("2 1\n0 0 1.0\n"), 2U);
  EXPECT_EQ(parse_error_line("3 2\n0 1 1.0\n0 5 1.0\n"), 3U);
  EXPECT_EQ(parse_error_line("2 1\n0 1 -0.5\n"), 2U);
  EXPECT_EQ(parse_error_line("2 1\n0 1 abc\n"), 2U);
  EXPECT_EQ(parse_error_line("2 1\n0 1\n"), 2U);
  EXPECT_EQ(parse_error_line("2 1\n0 1 0.5 9\n"), 2U);
  EXPECT_EQ(parse_error_line("3 2\n0 1 0.5\n1 0 0.7\n"), 3U);
  EXPECT_EQ(parse_error_line("x 1\n"), 1U);
  EXPECT_EQ(parse_error_line("3 2\n0 1 0.5\n"), 3U);
  EXPECT_EQ(parse_error_line("2 1\n0 1 0.5\n1 0 0.5\n"), 3U);
  EXPECT_THROW((void)parse(""), ParseError);
}

TEST(GraphIoTest, RoundTripPreservesGeneratedGraphExactly) {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const Graph g = generate_graph({1000, 1, 25, seed});
    const std::string text = serialise(g);
    const Graph back = parse(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(serialise(back), text);
  }
}
