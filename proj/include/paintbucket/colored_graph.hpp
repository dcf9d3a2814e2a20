#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "paintbucket/color.hpp"

namespace paintbucket {

using VertexId = std::uint32_t;

struct Vertex {
  VertexId id;
  Color color;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Unordered pair; stored with `first < second` once normalized.
using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph with a black/white color per vertex.
///
/// Vertices are kept sorted by id and each adjacency list is sorted, so
/// iteration order is deterministic everywhere. The constructor rejects
/// duplicate ids, self-loops, duplicate edges and dangling endpoints with
/// InvalidPosition.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> ids() const noexcept { return ids_; }
  bool contains(VertexId id) const noexcept;
  Color color(VertexId id) const;
  std::span<const VertexId> neighbors(VertexId id) const;

  /// Position of `id` in ids(); throws std::out_of_range for unknown ids.
  std::size_t index_of(VertexId id) const;

  std::vector<Vertex> vertices() const;
  /// Every edge once as (smaller id, larger id), lexicographically sorted.
  std::vector<Edge> edges() const;
  std::size_t count(Color c) const noexcept;

  bool is_connected() const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  std::vector<VertexId> ids_;
  std::vector<Color> colors_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Monochromatic connected components, each sorted by id, ordered by their
/// smallest member.
std::vector<std::vector<VertexId>> groups(const ColoredGraph& g);

/// Flips the color of every vertex in the group containing `member`.
ColoredGraph flip_group(const ColoredGraph& g, VertexId member);

}  // namespace paintbucket
