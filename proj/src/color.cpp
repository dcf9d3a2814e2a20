#include "paintbucket/color.hpp"

namespace paintbucket {

std::optional<Color> parse_color(std::string_view text) {
  if (text == "black" || text == "Black" || text == "B" || text == "b") return Color::Black;
  if (text == "white" || text == "White" || text == "W" || text == "w") return Color::White;
  return std::nullopt;
}

}  // namespace paintbucket
