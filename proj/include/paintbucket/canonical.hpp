#pragma once

#include <compare>
#include <string>

#include "paintbucket/board.hpp"
#include "paintbucket/position.hpp"

namespace paintbucket {

enum class MemoMode : unsigned char {
  Labeled,      ///< key = the literal labeled position
  Isomorphism,  ///< key = color-preserving isomorphism class
};

/// Opaque byte string. Equal keys mean identical positions (labeled mode) or
/// color-preserving isomorphic positions (isomorphism mode).
struct CanonicalKey {
  std::string bytes;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const BipartitePosition& p, MemoMode mode);

/// True iff some isomorphism maps `a` onto `b` and preserves every color.
bool isomorphic(const BipartitePosition& a, const BipartitePosition& b);

namespace detail {

/// Raw bitset dump of the live part of `b`; only meaningful against boards
/// built from the same root position.
std::string labeled_form(const Board& b);

/// Canonical form of the colored graph in `b`.
///
/// Same-color vertices with identical neighborhoods are first collapsed into
/// one weighted vertex (the quotient determines the graph up to
/// isomorphism). The quotient is then canonized by color refinement seeded
/// with (color, weight), individualizing the first non-singleton cell and
/// keeping the smallest adjacency code over all leaves.
std::string exact_form(const Board& b);

}  // namespace detail

}  // namespace paintbucket
