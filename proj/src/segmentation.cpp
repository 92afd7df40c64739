#include "bloommst/segmentation.hpp"

#include <cmath>
#include <ostream>
#include <queue>

#include "bloommst/error.hpp"
#include "bloommst/mst.hpp"
#include "bloommst/random.hpp"

namespace bloommst {

double color_distance_sq(const Rgb& a, const Rgb& b) noexcept {
  double sum = 0.0;
  for (std::size_t c = 0; c < 3; ++c) {
    const double d = static_cast<double>(a[c]) - static_cast<double>(b[c]);
    sum += d * d;
  }
  return sum;
}

std::size_t pixel_graph_edge_count(std::size_t width, std::size_t height) noexcept {
  if (width == 0 || height == 0) return 0;
  return (width - 1) * height + width * (height - 1) + 2 * (width - 1) * (height - 1);
}

Graph image_to_graph(const PixelImage& img) {
  if (img.width == 0 || img.height == 0) throw ParameterError("image_to_graph: empty image");
  if (img.pixels.size() != img.width * img.height)
    throw ParameterError("image_to_graph: pixel buffer does not match dimensions");

  const std::size_t w = img.width;
  const std::size_t h = img.height;
  std::vector<Edge> edges;
  edges.reserve(pixel_graph_edge_count(w, h));

  auto link = [&](std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) {
    edges.push_back({static_cast<NodeId>(r0 * w + c0), static_cast<NodeId>(r1 * w + c1),
                     color_distance_sq(img.at(r0, c0), img.at(r1, c1))});
  };

  // Each pixel links right and to the three neighbours in the row below.
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      if (c + 1 < w) link(r, c, r, c + 1);
      if (r + 1 < h) {
        if (c > 0) link(r, c, r + 1, c - 1);
        link(r, c, r + 1, c);
        if (c + 1 < w) link(r, c, r + 1, c + 1);
      }
    }
  }
  return Graph::from_edges(w * h, std::move(edges));
}

SegmentationResult segment(const PixelImage& img, double threshold, const SolverChoice& solver) {
  if (std::isnan(threshold) || threshold < 0.0)
    throw ParameterError("segment: threshold must be non-negative");

  const Graph g = image_to_graph(img);
  const MstResult tree = std::visit(
      [&](const auto& s) -> MstResult {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, BloomSolver>)
          return prim_bloom(g, 0, s.epsilon, s.hash_seed);
        else
          return prim_baseline(g, 0);
      },
      solver);

  std::vector<Edge> kept;
  for (const auto& e : recover_edges(tree, g)) {
    if (!(e.weight > threshold)) kept.push_back(e);
  }
  const Graph forest = Graph::from_edges(g.node_count(), std::move(kept));

  constexpr auto kUnlabelled = std::numeric_limits<std::uint32_t>::max();
  SegmentationResult out;
  out.width = img.width;
  out.height = img.height;
  out.labels.assign(g.node_count(), kUnlabelled);

  std::queue<NodeId> frontier;
  std::uint32_t next_label = 0;
  for (std::size_t seed = 0; seed < g.node_count(); ++seed) {
    if (out.labels[seed] != kUnlabelled) continue;
    const std::uint32_t label = next_label++;
    out.labels[seed] = label;
    frontier.push(static_cast<NodeId>(seed));
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      for (const auto& nb : forest.neighbors(u)) {
        if (out.labels[nb.node] != kUnlabelled) continue;
        out.labels[nb.node] = label;
        frontier.push(nb.node);
      }
    }
  }
  out.cluster_count = next_label;
  return out;
}

PixelImage render_labels(const SegmentationResult& seg, std::uint64_t palette_seed) {
  Rng rng(palette_seed);
  std::vector<Rgb> palette(seg.cluster_count);
  for (auto& colour : palette) {
    const std::uint64_t bits = rng.next_u64();
    colour = {static_cast<std::uint8_t>(bits), static_cast<std::uint8_t>(bits >> 8),
              static_cast<std::uint8_t>(bits >> 16)};
  }
  PixelImage img;
  img.width = seg.width;
  img.height = seg.height;
  img.pixels.reserve(seg.labels.size());
  for (auto label : seg.labels) img.pixels.push_back(palette.at(label));
  return img;
}

void save_labels(const SegmentationResult& seg, std::ostream& image_out, std::ostream& count_out,
                 std::uint64_t palette_seed) {
  save_ppm(render_labels(seg, palette_seed), image_out);
  count_out << "label_count=" << seg.cluster_count << '\n';
}

}  // namespace bloommst
