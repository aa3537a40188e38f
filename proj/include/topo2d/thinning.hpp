#pragma once

#include <functional>
#include <utility>

#include "topo2d/grid.hpp"

namespace topo2d {

enum class ScanOrder { Raster, ReverseRaster };

struct ThinningPolicy {
    Adjacency n = Adjacency::Eight;
    bool preserve_endpoints = false;
    ScanOrder scan_order = ScanOrder::Raster;
};

struct ThinningReport {
    int iterations = 0;  // passes that deleted at least one pixel
    long long deleted = 0;
    int black_components_before = 0;
    int black_components_after = 0;
    int white_components_before = 0;
    int white_components_after = 0;

    bool topology_preserved() const {
        return black_components_before == black_components_after &&
               white_components_before == white_components_after;
    }
};

/// Exactly one of the 8 neighbors is black.
bool is_endpoint(NeighborhoodConfig c);

/// Called after every single deletion with the current image and the pixel
/// just removed.
using DeletionObserver = std::function<void(const BinaryImage&, PixelCoord)>;

/// Sequential thinning: scans in policy order and deletes each black pixel
/// that is simple in the current image (and not an endpoint when endpoints
/// are preserved), until a full pass deletes nothing.
std::pair<BinaryImage, ThinningReport> thin(const BinaryImage& img, const ThinningPolicy& policy,
                                            const DeletionObserver& on_delete = {});

/// Compares global black n-component and white nbar-component counts.
/// `deleted` is the drop in black pixel count; `iterations` stays 0.
ThinningReport audit(const BinaryImage& before, const BinaryImage& after, Adjacency n);

}  // namespace topo2d
