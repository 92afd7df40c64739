#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace bloommst {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;
  double weight;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node;
  EdgeId edge;
  double weight;
};

// Undirected weighted simple graph. Edge ids are the positions in edges();
// every edge shows up in both endpoints' neighbor lists under the same id.
// Immutable once built.
class Graph {
public:
  Graph() = default;

  /// Validates and normalises (u < v) the edge list. Throws ParameterError on
  /// self-loops, duplicate pairs, out-of-range ids, or negative/non-finite
  /// weights.
  static Graph from_edges(std::size_t node_count, std::vector<Edge> edges);

  [[nodiscard]] std::size_t node_count() const noexcept { return node_count_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(e); }

  [[nodiscard]] std::span<const Neighbor> neighbors(NodeId u) const noexcept {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
};

struct GeneratorConfig {
  std::size_t node_count = 1000;
  std::size_t min_extra_edges_per_node = 1;
  std::size_t max_extra_edges_per_node = 25;
  std::uint64_t seed = 0;
};

/// Random connected graph. Node i > 0 first links to a uniformly chosen
/// earlier node (the backbone); then every node u draws
/// c ~ Uniform{min..max} targets uniformly over all nodes, skipping
/// self-loops and pairs already present. Weights are Uniform[0, 1).
/// Draw order per step: parent, weight; then c, and per target: target,
/// weight (only when accepted).
[[nodiscard]] Graph generate_graph(const GeneratorConfig& config);

/// True iff a traversal from node 0 reaches every node. An empty graph is
/// trivially connected.
[[nodiscard]] bool is_connected(const Graph& g);

/// Text format: "<node_count> <edge_count>" then one "<u> <v> <weight>" line
/// per edge with u < v. Weights are written in shortest round-trip form.
void save_graph(const Graph& g, std::ostream& out);

/// Inverse of save_graph; edge ids follow line order. Throws ParseError with
/// the offending 1-based line number.
[[nodiscard]] Graph load_graph(std::istream& in);

}  // namespace bloommst
