#include "topo2d/topo_numbers.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace topo2d {
namespace {

constexpr std::uint8_t kEvenBits = 0x55;

constexpr bool neighbors_adjacent(int i, int j, Adjacency n) {
    const int dc = kNeighborOffsets[i].col - kNeighborOffsets[j].col;
    const int dr = kNeighborOffsets[i].row - kNeighborOffsets[j].row;
    const int ac = dc < 0 ? -dc : dc;
    const int ar = dr < 0 ? -dr : dr;
    if (i == j) return false;
    return n == Adjacency::Four ? ac + ar == 1 : (ac <= 1 && ar <= 1);
}

// adjacency[i] = bits of the neighbors adjacent to x_i, within N*_8 only.
constexpr std::array<std::uint8_t, 8> neighbor_graph(Adjacency n) {
    std::array<std::uint8_t, 8> g{};
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (neighbors_adjacent(i, j, n)) g[i] |= static_cast<std::uint8_t>(1u << j);
        }
    }
    return g;
}

constexpr auto kGraph4 = neighbor_graph(Adjacency::Four);
constexpr auto kGraph8 = neighbor_graph(Adjacency::Eight);

// Components of `set` under adjacency n that touch one of `anchors`.
constexpr int count_anchored_components(std::uint8_t set, Adjacency n, std::uint8_t anchors) {
    const auto& graph = n == Adjacency::Four ? kGraph4 : kGraph8;
    std::uint8_t unseen = set;
    int count = 0;
    while (unseen != 0) {
        std::uint8_t component = static_cast<std::uint8_t>(unseen & -unseen);
        std::uint8_t frontier = component;
        while (frontier != 0) {
            std::uint8_t grown = 0;
            for (int i = 0; i < 8; ++i) {
                if ((frontier >> i) & 1u) grown |= graph[i];
            }
            grown &= set;
            frontier = static_cast<std::uint8_t>(grown & ~component);
            component |= grown;
        }
        unseen = static_cast<std::uint8_t>(unseen & ~component);
        if (component & anchors) ++count;
    }
    return count;
}

constexpr int topo_count(std::uint8_t set, Adjacency n) {
    // Every neighbor is 8-adjacent to the center; only the even ones are
    // 4-adjacent.
    return count_anchored_components(set, n, n == Adjacency::Four ? kEvenBits : 0xFF);
}

constexpr int bit(std::uint8_t mask, int i) { return (mask >> (i & 7)) & 1; }

constexpr int hilditch_raw(std::uint8_t mask, int start) {
    std::array<int, 8> seq{};
    int len = 0;
    for (int step = 0; step < 8; ++step) {
        const int i = (start + step) & 7;
        if (i % 2 == 1 && bit(mask, i - 1) && bit(mask, i + 1)) continue;
        seq[len++] = bit(mask, i);
    }
    int passages = 0;
    for (int k = 0; k < len; ++k) {
        if (seq[k] == 0 && seq[(k + 1) % len] == 1) ++passages;
    }
    return passages;
}

constexpr int yokoi_raw(std::uint8_t mask, Adjacency n) {
    int sum = 0;
    for (int k = 0; k < 8; k += 2) {
        int a = bit(mask, k);
        int b = bit(mask, k + 1);
        int c = bit(mask, k + 2);
        if (n == Adjacency::Eight) {
            a = 1 - a;
            b = 1 - b;
            c = 1 - c;
        }
        sum += a - a * b * c;
    }
    return sum;
}

struct MetricTables {
    std::array<std::uint8_t, 256> t4{};
    std::array<std::uint8_t, 256> t8{};
    std::array<std::uint8_t, 256> h{};
    std::array<std::uint8_t, 256> y4{};
    std::array<std::uint8_t, 256> y8{};
};

constexpr MetricTables build_tables() {
    MetricTables t;
    for (int m = 0; m < 256; ++m) {
        const auto mask = static_cast<std::uint8_t>(m);
        t.t4[m] = static_cast<std::uint8_t>(topo_count(mask, Adjacency::Four));
        t.t8[m] = static_cast<std::uint8_t>(topo_count(mask, Adjacency::Eight));
        t.h[m] = static_cast<std::uint8_t>(hilditch_raw(mask, 0));
        t.y4[m] = static_cast<std::uint8_t>(yokoi_raw(mask, Adjacency::Four));
        t.y8[m] = static_cast<std::uint8_t>(yokoi_raw(mask, Adjacency::Eight));
    }
    return t;
}

constexpr MetricTables kTables = build_tables();

static_assert(kTables.t4[21] == 3 && kTables.t8[21] == 1);
static_assert(kTables.h[85] == 0 && kTables.t8[85] == 1);

}  // namespace

int topological_number(NeighborhoodConfig c, Adjacency n) {
    return n == Adjacency::Four ? kTables.t4[c.mask] : kTables.t8[c.mask];
}

int topological_number_complement(NeighborhoodConfig c, Adjacency m) {
    return topological_number(complement_config(c), m);
}

int hilditch(NeighborhoodConfig c) { return kTables.h[c.mask]; }

int hilditch_from(NeighborhoodConfig c, int start) {
    if (start < 0 || start > 6 || start % 2 != 0) {
        throw std::invalid_argument("hilditch_from: start must be a 4-neighbor index (0, 2, 4, 6)");
    }
    return hilditch_raw(c.mask, start);
}

int yokoi(NeighborhoodConfig c, Adjacency n) {
    return n == Adjacency::Four ? kTables.y4[c.mask] : kTables.y8[c.mask];
}

bool is_interior(NeighborhoodConfig c, Adjacency n) {
    return n == Adjacency::Four ? c.mask == 0xFF : (c.mask & kEvenBits) == kEvenBits;
}

bool is_isolated(NeighborhoodConfig c, Adjacency n) {
    return n == Adjacency::Eight ? c.mask == 0 : (c.mask & kEvenBits) == 0;
}

}  // namespace topo2d
