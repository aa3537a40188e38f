#pragma once

#include <string>
#include <string_view>

#include "topo2d/grid.hpp"

namespace topo2d {

/// Accepts three textual forms of a configuration:
///   - decimal mask, 0..255 (at most three digits)
///   - eight '0'/'1' characters giving p_0..p_7 (E, NE, N, NW, W, SW, S, SE)
///   - a 3x3 glyph block, rows top to bottom, '#' black, '.' white and 'x'
///     at the center; rows separated by newlines, '/' or spaces
/// Throws std::invalid_argument for anything else.
NeighborhoodConfig parse_config(std::string_view text);

std::string to_bit_string(NeighborhoodConfig c);

/// Three rows of glyphs joined by `row_separator`.
std::string to_glyphs(NeighborhoodConfig c, std::string_view row_separator = "\n");

}  // namespace topo2d
