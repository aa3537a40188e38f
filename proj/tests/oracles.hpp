#pragma once

// Brute-force reference computations for tests. They work on painted images
// and explicit neighbor arrays, never on the precomputed metric tables.

#include <array>
#include <cstdlib>
#include <set>

#include "topo2d/grid.hpp"

namespace topo2d::oracle {

inline std::array<int, 9> neighbor_bits(NeighborhoodConfig c) {
    std::array<int, 9> p{};
    for (int i = 0; i < 8; ++i) p[i] = c[i] ? 1 : 0;
    p[8] = p[0];
    return p;
}

// Components of the neighbors whose color is `color`, found by labeling a
// 3x3 image with the center forced off. A component counts when it contains
// a pixel n-adjacent to the center.
inline int topological_number(NeighborhoodConfig c, Adjacency n, Color color) {
    BinaryImage img(3, 3);
    const PixelCoord center{1, 1};
    for (int i = 0; i < 8; ++i) {
        const bool black_neighbor = c[i];
        const bool wanted = color == Color::Black ? black_neighbor : !black_neighbor;
        if (wanted) img.set(center + kNeighborOffsets[i], Color::Black);
    }
    const Labeling lab = label_components(img, n, Color::Black);
    std::set<int> touching;
    for (int r = 0; r < 3; ++r) {
        for (int col = 0; col < 3; ++col) {
            const auto id = lab.label({col, r});
            if (!id) continue;
            const int d4 = std::abs(col - 1) + std::abs(r - 1);
            if (n == Adjacency::Eight || d4 == 1) touching.insert(*id);
        }
    }
    return static_cast<int>(touching.size());
}

// Closed-form Hilditch crossing number: sum over the four 4-neighbors x_k of
// [x_k white and (x_{k+1} or x_{k+2} black)].
inline int hilditch_closed_form(NeighborhoodConfig c) {
    const auto p = neighbor_bits(c);
    int sum = 0;
    for (int k = 0; k < 8; k += 2) sum += (1 - p[k]) * ((p[k + 1] | p[k + 2]) ? 1 : 0);
    return sum;
}

inline int yokoi4(NeighborhoodConfig c) {
    const auto p = neighbor_bits(c);
    return (p[0] - p[0] * p[1] * p[2]) + (p[2] - p[2] * p[3] * p[4]) +
           (p[4] - p[4] * p[5] * p[6]) + (p[6] - p[6] * p[7] * p[8]);
}

inline int yokoi8(NeighborhoodConfig c) {
    auto p = neighbor_bits(c);
    for (int& v : p) v = 1 - v;
    return (p[0] - p[0] * p[1] * p[2]) + (p[2] - p[2] * p[3] * p[4]) +
           (p[4] - p[4] * p[5] * p[6]) + (p[6] - p[6] * p[7] * p[8]);
}

}  // namespace topo2d::oracle
