#include "paintbucket/grid.hpp"

#include <stdexcept>
#include <string>

#include "paintbucket/errors.hpp"

namespace paintbucket {

GridPosition::GridPosition(std::size_t rows, std::size_t cols, std::vector<Color> pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
  if (rows_ == 0 || cols_ == 0) throw InvalidPosition("grid must have at least one row and column");
  if (pixels_.size() != rows_ * cols_) {
    throw InvalidPosition("grid has " + std::to_string(pixels_.size()) + " pixels, expected " +
                          std::to_string(rows_ * cols_));
  }
}

Color GridPosition::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("pixel outside the grid");
  return pixels_[row * cols_ + col];
}

VertexId GridPosition::pixel_id(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("pixel outside the grid");
  return static_cast<VertexId>(row * cols_ + col);
}

GridPosition parse_grid(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError("grid text is empty");

  const std::size_t cols = lines.front().size();
  std::vector<Color> pixels;
  pixels.reserve(lines.size() * cols);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].empty()) throw ParseError("grid row " + std::to_string(r + 1) + " is empty");
    if (lines[r].size() != cols) {
      throw ParseError("ragged grid: row " + std::to_string(r + 1) + " has " +
                       std::to_string(lines[r].size()) + " pixels, expected " +
                       std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      switch (lines[r][c]) {
        case 'B': pixels.push_back(Color::Black); break;
        case 'W': pixels.push_back(Color::White); break;
        default:
          throw ParseError("unexpected character '" + std::string(1, lines[r][c]) +
                           "' at row " + std::to_string(r + 1) + ", column " +
                           std::to_string(c + 1));
      }
    }
  }
  return GridPosition(lines.size(), cols, std::move(pixels));
}

std::string format_grid(const GridPosition& g) {
  std::string out;
  out.reserve(g.rows() * (g.cols() + 1));
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) out += g.at(r, c) == Color::Black ? 'B' : 'W';
    out += '\n';
  }
  return out;
}

ColoredGraph grid_to_colored_graph(const GridPosition& g) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      const VertexId id = g.pixel_id(r, c);
      vertices.push_back({id, g.at(r, c)});
      if (c + 1 < g.cols()) edges.emplace_back(id, g.pixel_id(r, c + 1));
      if (r + 1 < g.rows()) edges.emplace_back(id, g.pixel_id(r + 1, c));
    }
  }
  return ColoredGraph(std::move(vertices), edges);
}

GridPosition flip_group(const GridPosition& g, std::size_t row, std::size_t col) {
  const ColoredGraph flipped = flip_group(grid_to_colored_graph(g), g.pixel_id(row, col));
  std::vector<Color> pixels;
  pixels.reserve(g.pixels().size());
  for (VertexId id : flipped.ids()) pixels.push_back(flipped.color(id));
  return GridPosition(g.rows(), g.cols(), std::move(pixels));
}

}  // namespace paintbucket
