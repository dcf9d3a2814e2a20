#include "paintbucket/board.hpp"

#include <string>

#include "paintbucket/errors.hpp"

namespace paintbucket::detail {

IndexedBoard to_board(const BipartitePosition& p) {
  if (p.size() > kMaxBoardVertices) {
    throw PreconditionError("solver supports at most " + std::to_string(kMaxBoardVertices) +
                            " vertices, position has " + std::to_string(p.size()));
  }
  IndexedBoard out;
  out.ids.assign(p.ids().begin(), p.ids().end());
  for (int i = 0; i < static_cast<int>(out.ids.size()); ++i) {
    out.board.alive |= bit(i);
    if (p.color(out.ids[i]) == Color::Black) out.board.black |= bit(i);
    for (VertexId nb : p.neighbors(out.ids[i])) {
      out.board.adj[i] |= bit(static_cast<int>(p.graph().index_of(nb)));
    }
  }
  return out;
}

BipartitePosition from_board(const Board& b, std::span<const VertexId> ids) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (std::uint64_t rest = b.alive; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    vertices.push_back({ids[v], b.color(v)});
    const std::uint64_t higher = v == kMaxBoardVertices - 1 ? 0 : ~((bit(v) << 1) - 1);
    for (std::uint64_t nb = b.adj[v] & higher; nb != 0; nb &= nb - 1) {
      edges.emplace_back(ids[v], ids[std::countr_zero(nb)]);
    }
  }
  return BipartitePosition(std::move(vertices), edges);
}

}  // namespace paintbucket::detail
