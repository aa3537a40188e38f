#include "topo2d/config_spec.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace topo2d {
namespace {

bool all_digits(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

bool all_binary(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char ch) { return ch == '0' || ch == '1'; });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Index of x_i inside a row-major 3x3 block, center at 4.
int glyph_index(int i) {
    const PixelCoord o = kNeighborOffsets[i];
    return (o.row + 1) * 3 + (o.col + 1);
}

}  // namespace

NeighborhoodConfig parse_config(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty configuration");

    if (s.size() <= 3 && all_digits(s)) {
        const int v = std::stoi(std::string(s));
        if (v > 255) throw std::invalid_argument("configuration mask out of range: " + std::string(s));
        return {static_cast<std::uint8_t>(v)};
    }

    if (s.size() == 8 && all_binary(s)) {
        std::uint8_t mask = 0;
        for (int i = 0; i < 8; ++i) {
            if (s[i] == '1') mask |= static_cast<std::uint8_t>(1u << i);
        }
        return {mask};
    }

    std::string glyphs;
    for (char ch : s) {
        if (ch == '\n' || ch == '\r' || ch == '/' || ch == ' ' || ch == '\t') continue;
        glyphs.push_back(ch);
    }
    if (glyphs.size() == 9 && glyphs[4] == 'x') {
        std::uint8_t mask = 0;
        bool ok = true;
        for (int i = 0; i < 9; ++i) {
            if (i != 4 && glyphs[i] != '#' && glyphs[i] != '.') ok = false;
        }
        if (ok) {
            for (int i = 0; i < 8; ++i) {
                if (glyphs[glyph_index(i)] == '#') mask |= static_cast<std::uint8_t>(1u << i);
            }
            return {mask};
        }
    }
    throw std::invalid_argument("unrecognized configuration '" + std::string(s) +
                                "' (expected 0-255, 8 binary digits, or a 3x3 '.#' block with 'x' center)");
}

std::string to_bit_string(NeighborhoodConfig c) {
    std::string s(8, '0');
    for (int i = 0; i < 8; ++i) {
        if (c[i]) s[i] = '1';
    }
    return s;
}

std::string to_glyphs(NeighborhoodConfig c, std::string_view row_separator) {
    std::string block(9, '.');
    block[4] = 'x';
    for (int i = 0; i < 8; ++i) {
        if (c[i]) block[glyph_index(i)] = '#';
    }
    std::string out;
    for (int r = 0; r < 3; ++r) {
        if (r > 0) out += row_separator;
        out += block.substr(static_cast<std::size_t>(r) * 3, 3);
    }
    return out;
}

}  // namespace topo2d
