#include "paintbucket/solver.hpp"

#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

#include "paintbucket/board.hpp"
#include "paintbucket/errors.hpp"

namespace paintbucket {

namespace {

using detail::Board;
using detail::bit;

// Transposition table with insert-if-absent semantics, striped by hash.
class SharedTable {
 public:
  std::optional<bool> find(const std::string& key) {
    Shard& shard = shard_for(key);
    std::lock_guard lock(shard.mutex);
    if (auto it = shard.map.find(key); it != shard.map.end()) return it->second;
    return std::nullopt;
  }

  void insert(std::string key, bool value) {
    Shard& shard = shard_for(key);
    std::lock_guard lock(shard.mutex);
    shard.map.emplace(std::move(key), value);
  }

 private:
  struct Shard {
    std::mutex mutex;
    std::unordered_map<std::string, bool> map;
  };

  Shard& shard_for(const std::string& key) {
    return shards_[std::hash<std::string>{}(key) % shards_.size()];
  }

  std::array<Shard, 64> shards_;
};

class Search {
 public:
  explicit Search(const SolveOptions& opts)
      : opts_(opts), start_(std::chrono::steady_clock::now()) {}

  // True iff `mover` wins from `b` under optimal play.
  bool wins(const Board& b, Color mover) {
    const std::uint64_t own = b.of(mover);
    const std::uint64_t theirs = b.of(opposite(mover));
    if (theirs == 0) return true;   // terminal in mover's color
    if (own == 0) return false;     // terminal in opponent's color
    // One opponent vertex: taking it absorbs every vertex of mover's color.
    if (std::popcount(theirs) == 1) return true;
    // One own vertex: any move leaves a single own vertex facing the
    // remaining opponent vertices, which the opponent then takes.
    if (std::popcount(own) == 1) return false;

    std::string key = make_key(b, mover);
    if (auto hit = table_.find(key)) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return *hit;
    }
    charge_node();

    bool result = false;
    for (std::uint64_t rest = theirs; rest != 0; rest &= rest - 1) {
      if (!wins(b.play(std::countr_zero(rest)), opposite(mover))) {
        result = true;
        break;
      }
    }
    table_.insert(std::move(key), result);
    return result;
  }

  std::uint64_t nodes() const { return nodes_.load(); }
  std::uint64_t hits() const { return hits_.load(); }

 private:
  std::string make_key(const Board& b, Color mover) const {
    std::string key = opts_.memo == MemoMode::Isomorphism ? detail::exact_form(b)
                                                          : detail::labeled_form(b);
    key.push_back(mover == Color::Black ? 'b' : 'w');
    return key;
  }

  void charge_node() {
    const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > opts_.node_budget) {
      throw BudgetExceeded("node budget of " + std::to_string(opts_.node_budget) +
                           " expansions exhausted");
    }
    if (opts_.time_budget && (n & 0x3FF) == 0 &&
        std::chrono::steady_clock::now() - start_ > *opts_.time_budget) {
      throw BudgetExceeded("time budget of " + std::to_string(opts_.time_budget->count()) +
                           " ms exhausted");
    }
  }

  const SolveOptions& opts_;
  std::chrono::steady_clock::time_point start_;
  SharedTable table_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> hits_{0};
};

// Evaluates every root move on a pool of workers; the shared table makes the
// later pv walk cheap. Returns whether the mover wins.
bool parallel_root(Search& search, const Board& root, Color mover, unsigned threads) {
  std::vector<int> targets;
  for (std::uint64_t rest = root.of(opposite(mover)); rest != 0; rest &= rest - 1) {
    targets.push_back(std::countr_zero(rest));
  }
  std::vector<char> child_lost(targets.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= targets.size()) return;
      try {
        child_lost[i] = search.wins(root.play(targets[i]), opposite(mover)) ? 0 : 1;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(targets.size());
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return std::find(child_lost.begin(), child_lost.end(), 1) != child_lost.end();
}

}  // namespace

SolveResult solve(const BipartitePosition& p, Color to_move, const SolveOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  const detail::IndexedBoard root = detail::to_board(p);
  Search search(opts);

  const bool mover_wins = (opts.threads > 1 && root.board.size() > 1)
                              ? parallel_root(search, root.board, to_move, opts.threads)
                              : search.wins(root.board, to_move);
  SolveResult result{mover_wins ? to_move : opposite(to_move), {}, 0, 0, {}};

  Board b = root.board;
  Color mover = to_move;
  while (b.size() > 1) {
    const std::uint64_t targets = b.of(opposite(mover));
    int chosen = std::countr_zero(targets);
    if (mover == result.winner) {
      for (std::uint64_t rest = targets; rest != 0; rest &= rest - 1) {
        const int t = std::countr_zero(rest);
        if (!search.wins(b.play(t), opposite(mover))) {
          chosen = t;
          break;
        }
      }
    }
    result.pv.push_back({mover, root.ids[static_cast<std::size_t>(chosen)]});
    b = b.play(chosen);
    mover = opposite(mover);
  }

  result.nodes_expanded = search.nodes();
  result.table_hits = search.hits();
  result.elapsed = std::chrono::steady_clock::now() - started;
  return result;
}

Move best_move(const BipartitePosition& p, Color to_move, const SolveOptions& opts) {
  if (is_terminal(p)) throw PreconditionError("no move to suggest: the game is over");
  return solve(p, to_move, opts).pv.front();
}

Color solve_colored_graph(const ColoredGraph& g, Color to_move) {
  if (g.empty() || !g.is_connected()) {
    throw InvalidPosition("solve_colored_graph needs a non-empty connected graph");
  }
  const int n = static_cast<int>(g.size());
  if (n > detail::kMaxBoardVertices) {
    throw PreconditionError("solve_colored_graph supports at most 64 vertices");
  }
  std::vector<std::uint64_t> adj(n, 0);
  std::uint64_t start_black = 0;
  for (int i = 0; i < n; ++i) {
    const VertexId id = g.ids()[i];
    if (g.color(id) == Color::Black) start_black |= bit(i);
    for (VertexId nb : g.neighbors(id)) adj[i] |= bit(static_cast<int>(g.index_of(nb)));
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;

  // Group containing `v` under coloring `black`.
  auto group_of = [&](std::uint64_t black, int v) {
    const std::uint64_t same = (black & bit(v)) ? black : all & ~black;
    std::uint64_t group = bit(v);
    std::uint64_t frontier = group;
    while (frontier != 0) {
      std::uint64_t grown = 0;
      for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
        grown |= adj[std::countr_zero(rest)];
      }
      grown &= same & ~group;
      group |= grown;
      frontier = grown;
    }
    return group;
  };

  std::unordered_map<std::uint64_t, bool> memo[2];
  std::function<bool(std::uint64_t, Color)> wins = [&](std::uint64_t black, Color mover) -> bool {
    if (black == 0 || black == all) return (black == all) == (mover == Color::Black);
    auto& table = memo[mover == Color::Black ? 0 : 1];
    if (auto it = table.find(black); it != table.end()) return it->second;
    const std::uint64_t theirs = mover == Color::Black ? all & ~black : black;
    bool result = false;
    for (std::uint64_t rest = theirs; rest != 0;) {
      const std::uint64_t group = group_of(black, std::countr_zero(rest));
      rest &= ~group;
      if (!wins(black ^ group, opposite(mover))) {
        result = true;
        break;
      }
    }
    table.emplace(black, result);
    return result;
  };
  return wins(start_black, to_move) ? to_move : opposite(to_move);
}

}  // namespace paintbucket
