#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "paintbucket/canonical.hpp"
#include "paintbucket/colored_graph.hpp"
#include "paintbucket/position.hpp"

namespace paintbucket {

struct SolveOptions {
  MemoMode memo = MemoMode::Labeled;
  /// Expansions (transposition-table misses) before BudgetExceeded.
  std::uint64_t node_budget = 100'000'000;
  std::optional<std::chrono::milliseconds> time_budget;
  /// Worker threads for the root moves; 1 is the reference behavior.
  unsigned threads = 1;
};

/// Default options with isomorphism-reduced memoization.
inline SolveOptions isomorphism_options() {
  SolveOptions opts;
  opts.memo = MemoMode::Isomorphism;
  return opts;
}

struct SolveResult {
  Color winner;
  /// Principal variation to the end of the game. The winner always takes
  /// its smallest-id winning move, the loser its smallest-id legal move.
  std::vector<Move> pv;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t table_hits = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Exact perfect-play solve of `p` with `to_move` on turn. Terminal
/// positions are won by the color of their single vertex. Throws
/// BudgetExceeded when the node or time budget runs out, and
/// PreconditionError for positions above 64 vertices.
SolveResult solve(const BipartitePosition& p, Color to_move, const SolveOptions& opts = {});

/// The first move of solve()'s pv: the smallest-id winning move, or the
/// smallest-id legal move when every move loses. Throws PreconditionError
/// on a terminal position.
Move best_move(const BipartitePosition& p, Color to_move, const SolveOptions& opts = {});

/// Perfect-play winner of the uncontracted game, where a move flips one of
/// the opponent's groups and the game ends on a monochromatic board. Works
/// on the colored graph directly and is memoized on the coloring only.
/// Requires a connected graph of at most 64 vertices.
Color solve_colored_graph(const ColoredGraph& g, Color to_move);

}  // namespace paintbucket
