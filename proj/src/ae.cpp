#include "paintbucket/ae.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "paintbucket/errors.hpp"

namespace paintbucket {

std::optional<AePlayer> parse_ae_player(std::string_view text) {
  if (text == "avoider" || text == "Avoider") return AePlayer::Avoider;
  if (text == "enforcer" || text == "Enforcer") return AePlayer::Enforcer;
  return std::nullopt;
}

AePosition::AePosition(std::vector<std::string> cells, std::vector<CellSet> sets, AePlayer to_move)
    : cells_(std::move(cells)), sets_(std::move(sets)), to_move_(to_move) {
  std::sort(cells_.begin(), cells_.end());
  if (auto dup = std::adjacent_find(cells_.begin(), cells_.end()); dup != cells_.end()) {
    throw InvalidPosition("duplicate cell '" + *dup + "'");
  }
  for (std::size_t j = 0; j < sets_.size(); ++j) {
    auto& set = sets_[j];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (const auto& cell : set) {
      if (!has_cell(cell)) {
        throw InvalidPosition("avoider set " + std::to_string(j) + " names unknown cell '" +
                              cell + "'");
      }
    }
  }
}

bool AePosition::has_cell(std::string_view cell) const noexcept {
  return std::binary_search(cells_.begin(), cells_.end(), cell);
}

std::size_t AePosition::index_of(std::string_view cell) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), cell);
  if (it == cells_.end() || *it != cell) {
    throw IllegalMove("unknown cell '" + std::string(cell) + "'");
  }
  return static_cast<std::size_t>(it - cells_.begin());
}

bool is_reserved_cell_name(std::string_view name) noexcept {
  if (name.size() < 2 || name.front() != 'x') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; });
}

AePosition ae_remove(const AePosition& p, std::string_view cell, AePlayer player) {
  if (!p.has_cell(cell)) throw IllegalMove("unknown cell '" + std::string(cell) + "'");
  std::vector<std::string> cells;
  for (const auto& c : p.cells()) {
    if (c != cell) cells.push_back(c);
  }
  std::vector<AePosition::CellSet> sets;
  for (const auto& set : p.sets()) {
    const bool hit = std::binary_search(set.begin(), set.end(), cell);
    if (player == AePlayer::Avoider) {
      AePosition::CellSet reduced;
      for (const auto& c : set) {
        if (c != cell) reduced.push_back(c);
      }
      sets.push_back(std::move(reduced));
    } else if (!hit) {
      sets.push_back(set);
    }
  }
  return AePosition(std::move(cells), std::move(sets), opposite(player));
}

AePosition ae_apply(const AePosition& p, std::string_view cell) {
  return ae_remove(p, cell, p.to_move());
}

AePlayer ae_winner_at_end(const AePosition& p) {
  if (!p.cells().empty()) {
    throw PreconditionError("avoider-enforcer game still has " +
                            std::to_string(p.cells().size()) + " cells to play");
  }
  return p.sets().empty() ? AePlayer::Avoider : AePlayer::Enforcer;
}

namespace {

// Removal game over bitmasks: `cells` are the remaining cells, `alive` the
// surviving avoider sets. A surviving set's contents are its original
// members intersected with `cells`.
class AeSearch {
 public:
  explicit AeSearch(const AePosition& p) {
    if (p.cells().size() > 64) throw PreconditionError("ae_solve supports at most 64 cells");
    if (p.sets().size() > 64) throw PreconditionError("ae_solve supports at most 64 avoider sets");
    for (const auto& set : p.sets()) {
      std::uint64_t mask = 0;
      for (const auto& c : set) mask |= std::uint64_t{1} << p.index_of(c);
      members_.push_back(mask);
    }
  }

  // True iff `mover` wins from this state.
  bool wins(std::uint64_t cells, std::uint64_t alive, AePlayer mover) {
    if (alive == 0) return mover == AePlayer::Avoider;
    for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
      // A fully colored set can no longer be removed by the enforcer.
      if ((members_[std::countr_zero(rest)] & cells) == 0) return mover == AePlayer::Enforcer;
    }
    if (cells == 0) return mover == AePlayer::Enforcer;  // unreachable: alive sets are empty

    const Key key{cells, alive, mover};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    for (std::uint64_t rest = cells; rest != 0; rest &= rest - 1) {
      const auto [next_cells, next_alive] = after(cells, alive, std::countr_zero(rest), mover);
      if (!wins(next_cells, next_alive, opposite(mover))) {
        result = true;
        break;
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  std::pair<std::uint64_t, std::uint64_t> after(std::uint64_t cells, std::uint64_t alive,
                                                int cell, AePlayer mover) const {
    const std::uint64_t bit = std::uint64_t{1} << cell;
    if (mover == AePlayer::Enforcer) {
      for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        if (members_[j] & bit) alive &= ~(std::uint64_t{1} << j);
      }
    }
    return {cells & ~bit, alive};
  }

 private:
  struct Key {
    std::uint64_t cells;
    std::uint64_t alive;
    AePlayer mover;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = k.cells * 0x9E3779B97F4A7C15ULL;
      h ^= (k.alive + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
      return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(k.mover));
    }
  };

  std::vector<std::uint64_t> members_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::string fresh_cell(const AePosition& p, unsigned first_index) {
  for (unsigned i = first_index;; ++i) {
    std::string name = "x" + std::to_string(i);
    if (!p.has_cell(name)) return name;
  }
}

}  // namespace

AeOutcome ae_solve(const AePosition& p) {
  AeSearch search(p);
  std::uint64_t cells = full_mask(p.cells().size());
  std::uint64_t alive = full_mask(p.sets().size());
  AePlayer mover = p.to_move();

  AeOutcome outcome{search.wins(cells, alive, mover) ? mover : opposite(mover), {}};
  while (cells != 0) {
    int chosen = std::countr_zero(cells);
    if (mover == outcome.winner) {
      for (std::uint64_t rest = cells; rest != 0; rest &= rest - 1) {
        const int cell = std::countr_zero(rest);
        const auto [nc, na] = search.after(cells, alive, cell, mover);
        if (!search.wins(nc, na, opposite(mover))) {
          chosen = cell;
          break;
        }
      }
    }
    outcome.pv.emplace_back(mover, p.cells()[static_cast<std::size_t>(chosen)]);
    std::tie(cells, alive) = search.after(cells, alive, chosen, mover);
    mover = opposite(mover);
  }
  return outcome;
}

AePosition normalize_avoider_first(const AePosition& p) {
  if (p.to_move() != AePlayer::Enforcer) {
    throw PreconditionError("normalize_avoider_first needs the enforcer to move");
  }
  std::vector<std::string> cells = p.cells();
  cells.push_back(fresh_cell(p, 0));
  return AePosition(std::move(cells), p.sets(), AePlayer::Avoider);
}

AePosition normalize_even(const AePosition& p) {
  if (p.to_move() != AePlayer::Avoider) {
    throw PreconditionError("normalize_even needs the avoider to move");
  }
  if (p.cells().size() % 2 == 0) {
    throw PreconditionError("normalize_even needs an odd number of cells");
  }
  const std::string extra = fresh_cell(p, 1);
  std::vector<std::string> cells = p.cells();
  cells.push_back(extra);
  std::vector<AePosition::CellSet> sets = p.sets();
  sets.push_back({extra});
  return AePosition(std::move(cells), std::move(sets), AePlayer::Avoider);
}

}  // namespace paintbucket
