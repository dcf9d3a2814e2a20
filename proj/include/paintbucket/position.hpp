#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "paintbucket/color.hpp"
#include "paintbucket/colored_graph.hpp"

namespace paintbucket {

/// Contracted Paintbucket position: a connected graph whose edges all join
/// a black vertex to a white one. Immutable once constructed.
class BipartitePosition {
 public:
  /// Throws InvalidPosition if `g` is empty, disconnected, or has an edge
  /// between two vertices of the same color.
  explicit BipartitePosition(ColoredGraph g);
  BipartitePosition(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

  const ColoredGraph& graph() const noexcept { return graph_; }

  std::size_t size() const noexcept { return graph_.size(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }
  std::span<const VertexId> ids() const noexcept { return graph_.ids(); }
  bool contains(VertexId id) const noexcept { return graph_.contains(id); }
  Color color(VertexId id) const { return graph_.color(id); }
  std::span<const VertexId> neighbors(VertexId id) const { return graph_.neighbors(id); }
  std::size_t count(Color c) const noexcept { return graph_.count(c); }

  std::vector<VertexId> vertices_of(Color c) const;
  /// Edges as (black id, white id), sorted.
  std::vector<Edge> oriented_edges() const;

  friend bool operator==(const BipartitePosition&, const BipartitePosition&) = default;

 private:
  ColoredGraph graph_;
};

struct Move {
  Color player;
  VertexId target;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Contracts every group to the vertex carrying its smallest id. Throws
/// InvalidPosition for an empty or disconnected graph.
BipartitePosition contract(const ColoredGraph& g);

/// One move per vertex of the opponent's color, ascending by id.
std::vector<Move> legal_moves(const BipartitePosition& p, Color player);

/// Recolors the target and merges it with all of its neighbors; the target
/// keeps its id and the merged neighbors' ids are retired.
BipartitePosition apply_move(const BipartitePosition& p, const Move& m);

bool is_terminal(const BipartitePosition& p) noexcept;
/// Throws PreconditionError unless the position is terminal.
Color winner_if_terminal(const BipartitePosition& p);

/// Applies `moves` in order. Players must alternate; when `first` is given
/// the first move must be by that player. Errors carry the ply index.
BipartitePosition replay(const BipartitePosition& p, std::span<const Move> moves,
                         std::optional<Color> first = std::nullopt);

}  // namespace paintbucket
