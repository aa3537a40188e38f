#pragma once

#include "topo2d/grid.hpp"

namespace topo2d {

// Neighborhood metrics of a black point. All values lie in [0, 4] and are
// served from tables computed at compile time.

/// Number of n-components of the black neighbors (center excluded) that are
/// n-adjacent to the center.
int topological_number(NeighborhoodConfig c, Adjacency n);

/// Same count for the white neighbors under adjacency m (the complement's
/// adjacency, usually opposite of the object's).
int topological_number_complement(NeighborhoodConfig c, Adjacency m);

/// Hilditch crossing number: 0->1 passages around x_0..x_7 after skipping each
/// diagonal whose two flanking 4-neighbors are both black.
int hilditch(NeighborhoodConfig c);

/// Hilditch number with the circular traversal started at 4-neighbor `start`
/// (0, 2, 4 or 6). Computed directly, not from the table.
int hilditch_from(NeighborhoodConfig c, int start);

/// Yokoi connectivity number Y_4 or Y_8.
int yokoi(NeighborhoodConfig c, Adjacency n);

/// No white neighbor under the complement adjacency: for n=4 all 8 neighbors
/// are black, for n=8 all four 4-neighbors are black.
bool is_interior(NeighborhoodConfig c, Adjacency n);

/// No black neighbor under adjacency n.
bool is_isolated(NeighborhoodConfig c, Adjacency n);

}  // namespace topo2d
