#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace topo2d {

/// Grid point. Columns grow rightward, rows grow downward, origin at the
/// top-left pixel of an image. Coordinates may lie outside any image.
struct PixelCoord {
    int col = 0;
    int row = 0;

    friend constexpr PixelCoord operator+(PixelCoord a, PixelCoord b) {
        return {a.col + b.col, a.row + b.row};
    }
    friend constexpr bool operator==(PixelCoord, PixelCoord) = default;
};

enum class Adjacency : int { Four = 4, Eight = 8 };

constexpr Adjacency opposite(Adjacency a) {
    return a == Adjacency::Four ? Adjacency::Eight : Adjacency::Four;
}

constexpr int to_int(Adjacency a) { return static_cast<int>(a); }

/// Throws std::invalid_argument unless n is 4 or 8.
Adjacency adjacency_from_int(int n);

/// Object/complement adjacency pair; only (4,8) and (8,4) are representable.
struct ConnectivityPair {
    Adjacency object = Adjacency::Eight;

    constexpr Adjacency complement() const { return opposite(object); }
};

enum class Color : std::uint8_t { White = 0, Black = 1 };

// Neighbor offsets x_0..x_7, counterclockwise from East. Even indices are the
// 4-neighbors, odd indices the diagonals.
inline constexpr std::array<PixelCoord, 8> kNeighborOffsets{{
    {+1, 0},   // E
    {+1, -1},  // NE
    {0, -1},   // N
    {-1, -1},  // NW
    {-1, 0},   // W
    {-1, +1},  // SW
    {0, +1},   // S
    {+1, +1},  // SE
}};

/// Points at d4 (n=4) or d8 (n=8) distance exactly 1 from p, in x_i order.
std::vector<PixelCoord> neighbors(PixelCoord p, Adjacency n);

/// The 8 neighbors of a black point as a bit mask: bit i is set when x_i is
/// black. The center is implicitly black.
struct NeighborhoodConfig {
    std::uint8_t mask = 0;

    constexpr bool operator[](int i) const { return ((mask >> (i & 7)) & 1u) != 0; }
    friend constexpr bool operator==(NeighborhoodConfig, NeighborhoodConfig) = default;
};

constexpr NeighborhoodConfig complement_config(NeighborhoodConfig c) {
    return {static_cast<std::uint8_t>(~c.mask)};
}

/// Every one of the 256 configurations in mask order.
constexpr std::array<NeighborhoodConfig, 256> all_configs() {
    std::array<NeighborhoodConfig, 256> out{};
    for (int m = 0; m < 256; ++m) out[m] = {static_cast<std::uint8_t>(m)};
    return out;
}

/// Finite binary image embedded in an infinite white plane.
class BinaryImage {
public:
    /// Throws std::invalid_argument for nonpositive dimensions.
    BinaryImage(int width, int height, Color fill = Color::White);

    /// Builds an image from text rows: '#' or '1' is black, anything else white.
    /// All rows must share the same length.
    static BinaryImage from_rows(std::initializer_list<std::string_view> rows);

    int width() const { return width_; }
    int height() const { return height_; }

    bool contains(PixelCoord p) const {
        return p.col >= 0 && p.row >= 0 && p.col < width_ && p.row < height_;
    }

    /// Out-of-bounds reads are white.
    Color at(PixelCoord p) const {
        return contains(p) ? static_cast<Color>(pixels_[index(p)]) : Color::White;
    }
    bool is_black(PixelCoord p) const { return at(p) == Color::Black; }

    /// Throws std::out_of_range outside the image.
    void set(PixelCoord p, Color c);

    std::size_t black_count() const;

    /// Rows of '#'/'.' joined by '\n'.
    std::string to_text() const;

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    std::size_t index(PixelCoord p) const {
        return static_cast<std::size_t>(p.row) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(p.col);
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

/// Reads the configuration of a black pixel. Throws std::invalid_argument
/// when the pixel at p is white.
NeighborhoodConfig extract_config(const BinaryImage& img, PixelCoord p);

/// Square canvas (odd side >= 3) with a black center surrounded by c and
/// white everywhere else.
BinaryImage paint_config(NeighborhoodConfig c, int canvas = 3);

inline PixelCoord canvas_center(int canvas) { return {canvas / 2, canvas / 2}; }

/// Independent uniform pixels, black with probability 1/2; each 64-bit draw
/// of the generator supplies 64 consecutive pixels in raster order.
BinaryImage random_image(int width, int height, std::mt19937_64& rng);

struct Labeling {
    int width = 0;
    int height = 0;
    std::vector<int> labels;  // -1 for pixels not of the labeled color
    int count = 0;
    bool includes_background = false;

    std::optional<int> label(PixelCoord p) const;
};

/// Connected components of one color. For white, all white outside the image
/// forms one background component (id 0), merged with any border-touching
/// white pixels.
Labeling label_components(const BinaryImage& img, Adjacency adjacency, Color color);

int count_components(const BinaryImage& img, Adjacency adjacency, Color color);

}  // namespace topo2d
