#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "bloommst/bit_array.hpp"
#include "bloommst/bloom.hpp"
#include "bloommst/error.hpp"
#include "bloommst/graph.hpp"

namespace bloommst {

/// Output of a Prim-style solver. Bit e of edge_bits is set iff edge e was
/// selected; the tree itself is recovered from the bitmap.
struct MstResult {
  double total_cost = 0.0;
  BitArray edge_bits;
  std::size_t selected_edge_count = 0;
  /// Nodes marked visited, start included.
  std::size_t spanned_node_count = 0;
};

/// Priority-queue entry: the edge that would attach `sink` to the tree.
/// Ordered by (cost, edge, sink), smallest first.
struct FrontierEntry {
  double cost;
  NodeId sink;
  EdgeId edge;

  friend bool operator<(const FrontierEntry& a, const FrontierEntry& b) noexcept {
    return std::tie(a.cost, a.edge, a.sink) < std::tie(b.cost, b.edge, b.sink);
  }
  friend bool operator>(const FrontierEntry& a, const FrontierEntry& b) noexcept { return b < a; }
};

/// Anything that can stand in for the visited set of the Bloom-filter solver.
template <typename S>
concept VisitedSet = requires(S set, const S& cset, std::uint64_t key) {
  set.add(key);
  { cset.contains(key) } -> std::convertible_to<bool>;
};

/// Exact set with the BloomFilter interface; turns the Bloom solver back into
/// classical Prim.
class ExactNodeSet {
public:
  void add(std::uint64_t key) { keys_.insert(key); }
  [[nodiscard]] bool contains(std::uint64_t key) const { return keys_.contains(key); }
  [[nodiscard]] std::size_t size() const noexcept { return keys_.size(); }

private:
  std::unordered_set<std::uint64_t> keys_;
};

/// Prim's algorithm with the visited set replaced by `visited`. The start node
/// is marked before the loop. A popped entry whose sink already tests positive
/// is dropped, and neighbors that test positive are never pushed, so a false
/// positive silently removes a node from the tree.
template <VisitedSet Set>
MstResult prim_with_visited_set(const Graph& g, NodeId start, Set& visited) {
  if (start >= g.node_count()) throw ParameterError("prim: start node out of range");

  MstResult result;
  result.edge_bits = BitArray(g.edge_count());

  std::priority_queue<FrontierEntry, std::vector<FrontierEntry>, std::greater<>> queue;
  visited.add(start);
  result.spanned_node_count = 1;
  for (const auto& nb : g.neighbors(start)) {
    if (!visited.contains(nb.node)) queue.push({nb.weight, nb.node, nb.edge});
  }

  while (!queue.empty()) {
    const FrontierEntry top = queue.top();
    queue.pop();
    if (visited.contains(top.sink)) continue;

    visited.add(top.sink);
    ++result.spanned_node_count;
    result.total_cost += top.cost;
    result.edge_bits.set(top.edge);
    ++result.selected_edge_count;

    for (const auto& nb : g.neighbors(top.sink)) {
      if (!visited.contains(nb.node)) queue.push({nb.weight, nb.node, nb.edge});
    }
  }
  return result;
}

/// Classical Prim with a hash set of visited nodes. On a disconnected graph
/// this spans only the component containing `start`.
[[nodiscard]] MstResult prim_baseline(const Graph& g, NodeId start);

/// Prim with a Bloom filter as the visited set, sized for g.node_count()
/// insertions at false-positive rate `epsilon`.
[[nodiscard]] MstResult prim_bloom(const Graph& g, NodeId start, double epsilon = kDefaultEpsilon,
                                   std::uint64_t hash_seed = kDefaultHashSeed);

/// Selected edges in ascending edge id. Throws ParameterError when the bitmap
/// does not match the graph.
[[nodiscard]] std::vector<Edge> recover_edges(const MstResult& result, const Graph& g);

}  // namespace bloommst
