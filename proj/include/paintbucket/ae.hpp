#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paintbucket {

enum class AePlayer : unsigned char { Avoider, Enforcer };

constexpr AePlayer opposite(AePlayer p) noexcept {
  return p == AePlayer::Avoider ? AePlayer::Enforcer : AePlayer::Avoider;
}

constexpr std::string_view to_string(AePlayer p) noexcept {
  return p == AePlayer::Avoider ? "avoider" : "enforcer";
}

std::optional<AePlayer> parse_ae_player(std::string_view text);

/// Avoider-enforcer position in the cell-removal formulation.
///
/// Cells are a set, kept sorted. Avoider sets form an indexed family: list
/// order and duplicates are preserved, while each member set is sorted.
class AePosition {
 public:
  using CellSet = std::vector<std::string>;

  /// Throws InvalidPosition on duplicate cells or a set member that is not a
  /// cell. Duplicates inside a single avoider set are collapsed.
  AePosition(std::vector<std::string> cells, std::vector<CellSet> sets, AePlayer to_move);

  const std::vector<std::string>& cells() const noexcept { return cells_; }
  const std::vector<CellSet>& sets() const noexcept { return sets_; }
  AePlayer to_move() const noexcept { return to_move_; }

  bool has_cell(std::string_view cell) const noexcept;
  /// 0-based position of `cell` in cells() (the reduction's c_{i+1}).
  std::size_t index_of(std::string_view cell) const;

  friend bool operator==(const AePosition&, const AePosition&) = default;

 private:
  std::vector<std::string> cells_;
  std::vector<CellSet> sets_;
  AePlayer to_move_;
};

/// Names of the form "x<digits>" are reserved for normalization cells.
bool is_reserved_cell_name(std::string_view name) noexcept;

/// `player` removes `cell`: the avoider strips it from every set, the
/// enforcer drops every set containing it. The turn passes to the other
/// player. Throws IllegalMove for an unknown cell.
AePosition ae_remove(const AePosition& p, std::string_view cell, AePlayer player);

/// ae_remove() by the player to move.
AePosition ae_apply(const AePosition& p, std::string_view cell);

/// Winner once every cell is gone. Throws PreconditionError otherwise.
AePlayer ae_winner_at_end(const AePosition& p);

struct AeOutcome {
  AePlayer winner;
  std::vector<std::pair<AePlayer, std::string>> pv;
};

/// Exact backward induction. The pv plays every remaining cell: the side to
/// move takes its lexicographically smallest winning cell, or its smallest
/// cell when it has none. Supports up to 64 cells and 64 avoider sets.
AeOutcome ae_solve(const AePosition& p);

/// Enforcer-to-move position -> equivalent avoider-to-move position with one
/// extra cell outside every avoider set.
AePosition normalize_avoider_first(const AePosition& p);

/// Avoider-to-move position with an odd number of cells -> equivalent one
/// with a fresh cell c' and the extra avoider set {c'}.
AePosition normalize_even(const AePosition& p);

}  // namespace paintbucket
