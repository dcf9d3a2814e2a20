#pragma once

#include <vector>

#include "paintbucket/grid.hpp"
#include "paintbucket/position.hpp"

namespace fixtures {

using namespace paintbucket;

// Opening board of the sample game: white corners and center.
inline GridPosition x_pattern() { return parse_grid("WBW\nBWB\nWBW\n"); }

// The sample game as pixel clicks (row, col): Black fills the top-right
// corner, White the bottom-edge center, Black the big white group, and
// White the remaining black group.
struct Click {
  Color player;
  std::size_t row;
  std::size_t col;
};

inline std::vector<Click> sample_game_clicks() {
  return {{Color::Black, 0, 2}, {Color::White, 2, 1}, {Color::Black, 2, 1}, {Color::White, 2, 1}};
}

// The same game on the contracted position (vertex = smallest pixel id of
// its group; the played vertex keeps its id).
inline std::vector<Move> sample_game_moves() {
  return {{Color::Black, 2}, {Color::White, 7}, {Color::Black, 7}, {Color::White, 7}};
}

// Contracted position after Black's first move.
inline BipartitePosition sample_game_second_panel() {
  return BipartitePosition(
      {{0, Color::White}, {2, Color::Black}, {3, Color::Black}, {4, Color::White}, {6, Color::White},
       {7, Color::Black}, {8, Color::White}},
      {{0, 2}, {0, 3}, {2, 4}, {2, 8}, {3, 4}, {3, 6}, {4, 7}, {6, 7}, {7, 8}});
}

inline BipartitePosition path(std::vector<Color> colors) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    vertices.push_back({static_cast<VertexId>(i), colors[i]});
    if (i > 0) edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(i));
  }
  return BipartitePosition(std::move(vertices), edges);
}

inline BipartitePosition single(Color c) { return BipartitePosition({{0, c}}, {}); }

}  // namespace fixtures
