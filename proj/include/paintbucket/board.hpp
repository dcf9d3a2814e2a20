#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "paintbucket/color.hpp"
#include "paintbucket/position.hpp"

namespace paintbucket::detail {

inline constexpr int kMaxBoardVertices = 64;

constexpr std::uint64_t bit(int i) noexcept { return std::uint64_t{1} << i; }

/// Bitset form of a BipartitePosition used inside the solver. Vertex i is the
/// i-th smallest id of the originating position; merged vertices simply drop
/// out of `alive`, so indices stay stable for the whole search.
struct Board {
  std::uint64_t alive = 0;
  std::uint64_t black = 0;
  std::array<std::uint64_t, kMaxBoardVertices> adj{};

  int size() const noexcept { return std::popcount(alive); }
  std::uint64_t of(Color c) const noexcept { return c == Color::Black ? black & alive : alive & ~black; }
  Color color(int v) const noexcept { return (black & bit(v)) ? Color::Black : Color::White; }

  /// The owner of the opposite color plays `target`.
  Board play(int target) const noexcept {
    Board next = *this;
    const std::uint64_t merged = adj[target];
    std::uint64_t joined = 0;
    for (std::uint64_t rest = merged; rest != 0; rest &= rest - 1) joined |= adj[std::countr_zero(rest)];
    joined &= ~bit(target);
    next.alive &= ~merged;
    next.black &= ~merged;
    next.black ^= bit(target);
    next.adj[target] = joined;
    for (std::uint64_t rest = joined; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      next.adj[x] = (adj[x] & ~merged) | bit(target);
    }
    for (std::uint64_t rest = merged; rest != 0; rest &= rest - 1) next.adj[std::countr_zero(rest)] = 0;
    return next;
  }
};

struct IndexedBoard {
  Board board;
  std::vector<VertexId> ids;  // board index -> vertex id
};

/// Throws PreconditionError for positions with more than 64 vertices.
IndexedBoard to_board(const BipartitePosition& p);
BipartitePosition from_board(const Board& b, std::span<const VertexId> ids);

}  // namespace paintbucket::detail
