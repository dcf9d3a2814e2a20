#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace paintbucket {

enum class Color : std::uint8_t { Black, White };

constexpr Color opposite(Color c) noexcept {
  return c == Color::Black ? Color::White : Color::Black;
}

constexpr std::string_view to_string(Color c) noexcept {
  return c == Color::Black ? "black" : "white";
}

/// Accepts "black"/"white" and the single letters "B"/"W" (either case).
std::optional<Color> parse_color(std::string_view text);

}  // namespace paintbucket
