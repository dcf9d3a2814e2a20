#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "paintbucket/color.hpp"
#include "paintbucket/colored_graph.hpp"

namespace paintbucket {

/// Rectangular board of pixels, stored row-major.
class GridPosition {
 public:
  GridPosition(std::size_t rows, std::size_t cols, std::vector<Color> pixels);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Color at(std::size_t row, std::size_t col) const;
  const std::vector<Color>& pixels() const noexcept { return pixels_; }

  /// Vertex id used for the pixel in grid_to_colored_graph().
  VertexId pixel_id(std::size_t row, std::size_t col) const;

  friend bool operator==(const GridPosition&, const GridPosition&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Color> pixels_;
};

/// One line per row of 'B'/'W'. A trailing newline (and CRLF endings) are
/// accepted; ragged rows, blank rows and other characters are ParseErrors.
GridPosition parse_grid(std::string_view text);
std::string format_grid(const GridPosition& g);

/// Pixel (r, c) becomes vertex r*cols + c; edges join 4-neighbors.
ColoredGraph grid_to_colored_graph(const GridPosition& g);

/// Flood-fills the group containing pixel (row, col) with the other color.
GridPosition flip_group(const GridPosition& g, std::size_t row, std::size_t col);

}  // namespace paintbucket
