#include "topo2d/thinning.hpp"

#include <bit>

#include "topo2d/simplicity.hpp"

namespace topo2d {

bool is_endpoint(NeighborhoodConfig c) { return std::popcount(c.mask) == 1; }

std::pair<BinaryImage, ThinningReport> thin(const BinaryImage& img, const ThinningPolicy& policy,
                                            const DeletionObserver& on_delete) {
    BinaryImage work = img;
    const SimplicityLut& lut = simplicity_lut(policy.n);
    const int w = work.width();
    const int h = work.height();
    const long long total = static_cast<long long>(w) * h;

    int iterations = 0;
    long long deleted = 0;
    for (;;) {
        long long deleted_this_pass = 0;
        for (long long i = 0; i < total; ++i) {
            const long long k = policy.scan_order == ScanOrder::Raster ? i : total - 1 - i;
            const PixelCoord p{static_cast<int>(k % w), static_cast<int>(k / w)};
            if (!work.is_black(p)) continue;
            const NeighborhoodConfig c = extract_config(work, p);
            if (!lut[c]) continue;
            if (policy.preserve_endpoints && is_endpoint(c)) continue;
            work.set(p, Color::White);
            ++deleted_this_pass;
            if (on_delete) on_delete(work, p);
        }
        if (deleted_this_pass == 0) break;
        ++iterations;
        deleted += deleted_this_pass;
    }

    ThinningReport report = audit(img, work, policy.n);
    report.iterations = iterations;
    report.deleted = deleted;
    return {std::move(work), report};
}

ThinningReport audit(const BinaryImage& before, const BinaryImage& after, Adjacency n) {
    ThinningReport r;
    r.black_components_before = count_components(before, n, Color::Black);
    r.black_components_after = count_components(after, n, Color::Black);
    r.white_components_before = count_components(before, opposite(n), Color::White);
    r.white_components_after = count_components(after, opposite(n), Color::White);
    const auto b = static_cast<long long>(before.black_count());
    const auto a = static_cast<long long>(after.black_count());
    r.deleted = b > a ? b - a : 0;
    return r;
}

}  // namespace topo2d
