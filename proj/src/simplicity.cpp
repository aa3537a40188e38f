#include "topo2d/simplicity.hpp"

#include <stdexcept>

#include "topo2d/topo_numbers.hpp"

namespace topo2d {
namespace {

struct ComponentCounts {
    int black = 0;
    int white = 0;
    friend bool operator==(ComponentCounts, ComponentCounts) = default;
};

ComponentCounts counts(const BinaryImage& img, Adjacency n) {
    return {count_components(img, n, Color::Black),
            count_components(img, opposite(n), Color::White)};
}

// Deletes p from a scratch copy, recounts, then restores it.
bool deletion_preserves(BinaryImage& scratch, PixelCoord p, Adjacency n, ComponentCounts before) {
    scratch.set(p, Color::White);
    const ComponentCounts after = counts(scratch, n);
    scratch.set(p, Color::Black);
    return after == before;
}

}  // namespace

std::string_view to_string(Characterization method) {
    switch (method) {
        case Characterization::TwoTopoNumbers: return "two-topological-numbers";
        case Characterization::TopoNumberPlusInterior: return "topological-number+interior";
        case Characterization::Hilditch: return "hilditch";
        case Characterization::Yokoi: return "yokoi";
        case Characterization::Oracle: return "oracle";
    }
    return "unknown";
}

bool is_simple(NeighborhoodConfig c, Adjacency n, Characterization method) {
    switch (method) {
        case Characterization::TwoTopoNumbers:
            return topological_number(c, n) == 1 &&
                   topological_number_complement(c, opposite(n)) == 1;
        case Characterization::TopoNumberPlusInterior:
            return topological_number(c, n) == 1 && !is_interior(c, n);
        case Characterization::Hilditch:
            if (n != Adjacency::Eight) {
                throw std::invalid_argument("the Hilditch characterization is defined for n = 8 only");
            }
            return hilditch(c) == 1;
        case Characterization::Yokoi:
            return yokoi(c, n) == 1;
        case Characterization::Oracle:
            return oracle_is_simple(c, n);
    }
    throw std::invalid_argument("unknown characterization");
}

bool oracle_is_simple(NeighborhoodConfig c, Adjacency n, int canvas) {
    if (canvas < 5 || canvas % 2 == 0) {
        throw std::invalid_argument("oracle canvas must be odd and >= 5, got " + std::to_string(canvas));
    }
    return globally_simple(paint_config(c, canvas), canvas_center(canvas), n);
}

bool globally_simple(const BinaryImage& img, PixelCoord p, Adjacency n) {
    if (!img.is_black(p)) throw std::invalid_argument("globally_simple: pixel is not black");
    BinaryImage scratch = img;
    return deletion_preserves(scratch, p, n, counts(img, n));
}

std::string SimplicityLut::to_bit_string() const {
    std::string s(256, '0');
    for (std::size_t m = 0; m < 256; ++m) {
        if (bits_[m]) s[m] = '1';
    }
    return s;
}

std::string SimplicityLut::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(64);
    for (std::size_t byte = 0; byte < 32; ++byte) {
        unsigned v = 0;
        for (std::size_t b = 0; b < 8; ++b) {
            if (bits_[8 * byte + b]) v |= 1u << b;
        }
        s.push_back(kDigits[v >> 4]);
        s.push_back(kDigits[v & 0xF]);
    }
    return s;
}

SimplicityLut build_lut(Adjacency n, Characterization method) {
    if (method == Characterization::Hilditch && n != Adjacency::Eight) {
        throw std::invalid_argument("the Hilditch characterization is defined for n = 8 only");
    }
    std::bitset<256> bits;
    for (NeighborhoodConfig c : all_configs()) bits[c.mask] = is_simple(c, n, method);
    return {n, bits};
}

SimplicityLut build_oracle_lut(Adjacency n, int canvas) {
    std::bitset<256> bits;
    for (NeighborhoodConfig c : all_configs()) bits[c.mask] = oracle_is_simple(c, n, canvas);
    return {n, bits};
}

const SimplicityLut& simplicity_lut(Adjacency n) {
    static const SimplicityLut lut4 = build_lut(Adjacency::Four, Characterization::TopoNumberPlusInterior);
    static const SimplicityLut lut8 = build_lut(Adjacency::Eight, Characterization::TopoNumberPlusInterior);
    return n == Adjacency::Four ? lut4 : lut8;
}

bool image_is_simple(const BinaryImage& img, PixelCoord p, Adjacency n) {
    if (!img.is_black(p)) throw std::invalid_argument("image_is_simple: pixel is not black");
    return simplicity_lut(n)[extract_config(img, p)];
}

std::vector<PixelCoord> locality_mismatches(const BinaryImage& img, Adjacency n) {
    std::vector<PixelCoord> out;
    const ComponentCounts before = counts(img, n);
    BinaryImage scratch = img;
    for (int r = 0; r < img.height(); ++r) {
        for (int c = 0; c < img.width(); ++c) {
            const PixelCoord p{c, r};
            if (!img.is_black(p)) continue;
            if (image_is_simple(img, p, n) != deletion_preserves(scratch, p, n, before)) {
                out.push_back(p);
            }
        }
    }
    return out;
}

}  // namespace topo2d
