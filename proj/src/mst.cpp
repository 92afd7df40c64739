#include "bloommst/mst.hpp"

namespace bloommst {

MstResult prim_baseline(const Graph& g, NodeId start) {
  if (start >= g.node_count()) throw ParameterError("prim_baseline: start node out of range");

  MstResult result;
  result.edge_bits = BitArray(g.edge_count());

  std::unordered_set<NodeId> visited;
  std::priority_queue<FrontierEntry, std::vector<FrontierEntry>, std::greater<>> queue;

  auto visit = [&](NodeId u) {
    visited.insert(u);
    for (const auto& nb : g.neighbors(u)) {
      if (!visited.contains(nb.node)) queue.push({nb.weight, nb.node, nb.edge});
    }
  };

  visit(start);
  while (!queue.empty()) {
    const FrontierEntry top = queue.top();
    queue.pop();
    if (visited.contains(top.sink)) continue;
    result.total_cost += top.cost;
    result.edge_bits.set(top.edge);
    ++result.selected_edge_count;
    visit(top.sink);
  }
  result.spanned_node_count = visited.size();
  return result;
}

MstResult prim_bloom(const Graph& g, NodeId start, double epsilon, std::uint64_t hash_seed) {
  if (start >= g.node_count()) throw ParameterError("prim_bloom: start node out of range");
  BloomFilter filter(bloom_params(g.node_count(), epsilon), hash_seed);
  return prim_with_visited_set(g, start, filter);
}

std::vector<Edge> recover_edges(const MstResult& result, const Graph& g) {
  if (result.edge_bits.size() != g.edge_count())
    throw ParameterError("recover_edges: edge bitmap length does not match the graph");
  std::vector<Edge> out;
  out.reserve(result.selected_edge_count);
  result.edge_bits.for_each_set([&](std::size_t e) { out.push_back(g.edge(static_cast<EdgeId>(e))); });
  return out;
}

}  // namespace bloommst
