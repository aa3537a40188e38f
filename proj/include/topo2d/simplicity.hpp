#pragma once

#include <bitset>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "topo2d/grid.hpp"

namespace topo2d {

/// Ways of deciding whether a black point is simple.
enum class Characterization {
    TwoTopoNumbers,          // T_n(x,X) = 1 and T_nbar(x,Xbar) = 1
    TopoNumberPlusInterior,  // T_n(x,X) = 1 and x not n-interior
    Hilditch,                // H(x,X) = 1, n = 8 only
    Yokoi,                   // Y_n(x,X) = 1
    Oracle,                  // global component counts before/after deletion
};

std::string_view to_string(Characterization method);

/// Throws std::invalid_argument for Hilditch with n = 4.
bool is_simple(NeighborhoodConfig c, Adjacency n, Characterization method);

/// Deletes the center of `c` painted on a canvas x canvas white image and
/// compares black n-component and white nbar-component counts. `canvas`
/// must be odd and at least 5.
bool oracle_is_simple(NeighborhoodConfig c, Adjacency n, int canvas = 5);

/// Whether deleting the black pixel p leaves both global component counts of
/// img unchanged. Throws std::invalid_argument when p is white.
bool globally_simple(const BinaryImage& img, PixelCoord p, Adjacency n);

class SimplicityLut {
public:
    SimplicityLut(Adjacency n, std::bitset<256> bits) : n_(n), bits_(bits) {}

    Adjacency adjacency() const { return n_; }
    bool operator[](NeighborhoodConfig c) const { return bits_[c.mask]; }
    const std::bitset<256>& bits() const { return bits_; }
    std::size_t popcount() const { return bits_.count(); }

    /// 256 characters, character k is '1' when mask k is simple.
    std::string to_bit_string() const;

    /// 64 lowercase hex digits for 32 bytes; bit i of byte j is mask 8j+i.
    std::string to_hex() const;

    friend bool operator==(const SimplicityLut&, const SimplicityLut&) = default;

private:
    Adjacency n_;
    std::bitset<256> bits_;
};

SimplicityLut build_lut(Adjacency n, Characterization method);

/// Oracle table evaluated on a specific canvas size.
SimplicityLut build_oracle_lut(Adjacency n, int canvas);

/// Production classifier for adjacency n, built once on first use.
const SimplicityLut& simplicity_lut(Adjacency n);

/// Table lookup on the configuration of black pixel p. Throws
/// std::invalid_argument when p is white.
bool image_is_simple(const BinaryImage& img, PixelCoord p, Adjacency n);

/// Black pixels where the table disagrees with globally_simple.
std::vector<PixelCoord> locality_mismatches(const BinaryImage& img, Adjacency n);

}  // namespace topo2d
