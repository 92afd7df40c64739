#include "bloommst/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>

#include "bloommst/error.hpp"
#include "bloommst/random.hpp"

namespace bloommst {
namespace {

std::uint64_t pair_key(NodeId u, NodeId v) noexcept {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

}  // namespace

Graph Graph::from_edges(std::size_t node_count, std::vector<Edge> edges) {
  if (node_count > std::size_t{0xffffffff}) throw ParameterError("graph: too many nodes");
  if (edges.size() > std::size_t{0xffffffff}) throw ParameterError("graph: too many edges");

  std::vector<std::uint64_t> keys;
  keys.reserve(edges.size());
  for (auto& e : edges) {
    if (e.u >= node_count || e.v >= node_count) throw ParameterError("graph: node id out of range");
    if (e.u == e.v) throw ParameterError("graph: self-loop on node " + std::to_string(e.u));
    if (!std::isfinite(e.weight) || e.weight < 0.0)
      throw ParameterError("graph: weights must be finite and non-negative");
    if (e.u > e.v) std::swap(e.u, e.v);
    keys.push_back(pair_key(e.u, e.v));
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw ParameterError("graph: duplicate edge");

  Graph g;
  g.node_count_ = node_count;
  g.edges_ = std::move(edges);

  std::vector<std::size_t> degree(node_count + 1, 0);
  for (const auto& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];

  g.adjacency_.resize(g.offsets_[node_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t id = 0; id < g.edges_.size(); ++id) {
    const auto& e = g.edges_[id];
    const auto eid = static_cast<EdgeId>(id);
    g.adjacency_[cursor[e.u]++] = {e.v, eid, e.weight};
    g.adjacency_[cursor[e.v]++] = {e.u, eid, e.weight};
  }
  return g;
}

Graph generate_graph(const GeneratorConfig& config) {
  if (config.node_count < 2) throw ParameterError("generate_graph: node_count must be at least 2");
  if (config.min_extra_edges_per_node < 1 ||
      config.min_extra_edges_per_node > config.max_extra_edges_per_node)
    throw ParameterError("generate_graph: need 1 <= min_extra_edges <= max_extra_edges");

  const std::size_t n = config.node_count;
  Rng rng(config.seed);
  std::vector<Edge> edges;
  edges.reserve(n * (config.min_extra_edges_per_node + config.max_extra_edges_per_node) / 2 + n);
  std::unordered_set<std::uint64_t> present;
  present.reserve(edges.capacity());

  for (std::size_t i = 1; i < n; ++i) {
    const auto parent = static_cast<NodeId>(rng.below(i));
    const auto child = static_cast<NodeId>(i);
    edges.push_back({parent, child, rng.unit()});
    present.insert(pair_key(parent, child));
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto u = static_cast<NodeId>(i);
    const auto extra =
        rng.between(config.min_extra_edges_per_node, config.max_extra_edges_per_node);
    for (std::uint64_t j = 0; j < extra; ++j) {
      const auto v = static_cast<NodeId>(rng.below(n));
      if (v == u || !present.insert(pair_key(u, v)).second) continue;
      edges.push_back({std::min(u, v), std::max(u, v), rng.unit()});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<NodeId> frontier;
  seen[0] = true;
  frontier.push(0);
  std::size_t visited = 1;
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (const auto& nb : g.neighbors(u)) {
      if (seen[nb.node]) continue;
      seen[nb.node] = true;
      ++visited;
      frontier.push(nb.node);
    }
  }
  return visited == n;
}

void save_graph(const Graph& g, std::ostream& out) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  char buf[64];
  for (const auto& e : g.edges()) {
    auto res = std::to_chars(buf, buf + sizeof buf, e.weight);
    out << e.u << ' ' << e.v << ' ' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf))
        << '\n';
  }
}

namespace {

// Whitespace-separated fields of one line, parsed strictly.
class LineFields {
public:
  LineFields(std::string_view line, std::size_t lineno) : rest_(line), lineno_(lineno) {}

  template <typename T>
  T next(const char* what) {
    skip_space();
    if (rest_.empty()) throw ParseError(std::string("missing ") + what, lineno_);
    T value{};
    auto [ptr, ec] = std::from_chars(rest_.data(), rest_.data() + rest_.size(), value);
    if (ec != std::errc{} || (ptr != rest_.data() + rest_.size() && !is_space(*ptr)))
      throw ParseError(std::string("malformed ") + what, lineno_);
    rest_.remove_prefix(static_cast<std::size_t>(ptr - rest_.data()));
    return value;
  }

  void expect_end() {
    skip_space();
    if (!rest_.empty()) throw ParseError("trailing characters", lineno_);
  }

private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
  void skip_space() {
    while (!rest_.empty() && is_space(rest_.front())) rest_.remove_prefix(1);
  }

  std::string_view rest_;
  std::size_t lineno_;
};

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!blank(line)) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty graph file", 1);
  LineFields header(line, lineno);
  const auto node_count = header.next<std::uint64_t>("node count");
  const auto edge_count = header.next<std::uint64_t>("edge count");
  header.expect_end();
  if (node_count > 0xffffffffULL) throw ParseError("node count too large", lineno);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(edge_count, 1U << 24)));
  std::unordered_set<std::uint64_t> present;
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    if (!next_line())
      throw ParseError("expected " + std::to_string(edge_count) + " edges, found " +
                           std::to_string(i),
                       lineno + 1);
    LineFields f(line, lineno);
    const auto u = f.next<std::uint64_t>("source node");
    const auto v = f.next<std::uint64_t>("target node");
    const auto w = f.next<double>("weight");
    f.expect_end();
    if (u >= node_count || v >= node_count) throw ParseError("node id out of range", lineno);
    if (u == v) throw ParseError("self-loop", lineno);
    if (!std::isfinite(w) || w < 0.0) throw ParseError("weight must be finite and non-negative", lineno);
    const auto nu = static_cast<NodeId>(u);
    const auto nv = static_cast<NodeId>(v);
    if (!present.insert(pair_key(nu, nv)).second) throw ParseError("duplicate edge", lineno);
    edges.push_back({nu, nv, w});
  }
  if (next_line()) throw ParseError("unexpected content after last edge", lineno);
  return Graph::from_edges(static_cast<std::size_t>(node_count), std::move(edges));
}

}  // namespace bloommst
