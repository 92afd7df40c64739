#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <variant>
#include <vector>

#include "bloommst/bloom.hpp"
#include "bloommst/graph.hpp"

namespace bloommst {

using Rgb = std::array<std::uint8_t, 3>;

/// Row-major 8-bit RGB image.
struct PixelImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Rgb> pixels;

  [[nodiscard]] const Rgb& at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
  friend bool operator==(const PixelImage&, const PixelImage&) = default;
};

/// One component id per pixel, ids contiguous in [0, cluster_count).
struct SegmentationResult {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint32_t> labels;
  std::size_t cluster_count = 0;
};

struct BaselineSolver {};
struct BloomSolver {
  double epsilon = kDefaultEpsilon;
  std::uint64_t hash_seed = kDefaultHashSeed;
};
using SolverChoice = std::variant<BaselineSolver, BloomSolver>;

inline constexpr double kDefaultThreshold = 100.0;
inline constexpr double kNoThreshold = std::numeric_limits<double>::infinity();

/// Squared RGB distance between two pixels.
[[nodiscard]] double color_distance_sq(const Rgb& a, const Rgb& b) noexcept;

/// (W-1)H + W(H-1) + 2(W-1)(H-1)
[[nodiscard]] std::size_t pixel_graph_edge_count(std::size_t width, std::size_t height) noexcept;

/// 8-connected pixel graph: node = row * width + col, one edge per adjacent
/// pair weighted by squared RGB distance. Throws ParameterError on an empty
/// image or a pixel buffer of the wrong size.
[[nodiscard]] Graph image_to_graph(const PixelImage& img);

/// MST from pixel 0 with the chosen solver, tree edges heavier than
/// `threshold` dropped, components labelled by BFS in ascending order of
/// their smallest pixel. Pixels the solver never reached become singletons.
[[nodiscard]] SegmentationResult segment(const PixelImage& img, double threshold,
                                         const SolverChoice& solver);

/// Binary (P6) or plain (P3) pixmap with maxval 255.
[[nodiscard]] PixelImage load_ppm(std::istream& in);
void save_ppm(const PixelImage& img, std::ostream& out, bool plain = false);

/// Colour image of the labels; each label gets a colour from a palette seeded
/// by `palette_seed`, so equal labels always render equally.
[[nodiscard]] PixelImage render_labels(const SegmentationResult& seg, std::uint64_t palette_seed = 0);
void save_labels(const SegmentationResult& seg, std::ostream& image_out, std::ostream& count_out,
                 std::uint64_t palette_seed = 0);

}  // namespace bloommst
