#include "topo2d/grid.hpp"

#include <stdexcept>

namespace topo2d {

Adjacency adjacency_from_int(int n) {
    if (n == 4) return Adjacency::Four;
    if (n == 8) return Adjacency::Eight;
    throw std::invalid_argument("adjacency must be 4 or 8, got " + std::to_string(n));
}

std::vector<PixelCoord> neighbors(PixelCoord p, Adjacency n) {
    std::vector<PixelCoord> out;
    out.reserve(8);
    const int step = n == Adjacency::Four ? 2 : 1;
    for (int i = 0; i < 8; i += step) out.push_back(p + kNeighborOffsets[i]);
    return out;
}

BinaryImage::BinaryImage(int width, int height, Color fill) : width_(width), height_(height) {
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("image dimensions must be positive, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
    pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                   static_cast<std::uint8_t>(fill));
}

BinaryImage BinaryImage::from_rows(std::initializer_list<std::string_view> rows) {
    if (rows.size() == 0) throw std::invalid_argument("from_rows: no rows");
    const auto width = static_cast<int>(rows.begin()->size());
    BinaryImage img(width, static_cast<int>(rows.size()));
    int r = 0;
    for (std::string_view line : rows) {
        if (static_cast<int>(line.size()) != width) {
            throw std::invalid_argument("from_rows: ragged row " + std::to_string(r));
        }
        for (int c = 0; c < width; ++c) {
            if (line[c] == '#' || line[c] == '1') img.set({c, r}, Color::Black);
        }
        ++r;
    }
    return img;
}

void BinaryImage::set(PixelCoord p, Color c) {
    if (!contains(p)) {
        throw std::out_of_range("pixel (" + std::to_string(p.col) + "," + std::to_string(p.row) +
                                ") outside image");
    }
    pixels_[index(p)] = static_cast<std::uint8_t>(c);
}

std::size_t BinaryImage::black_count() const {
    std::size_t n = 0;
    for (auto v : pixels_) n += v;
    return n;
}

std::string BinaryImage::to_text() const {
    std::string s;
    s.reserve(pixels_.size() + static_cast<std::size_t>(height_));
    for (int r = 0; r < height_; ++r) {
        if (r > 0) s.push_back('\n');
        for (int c = 0; c < width_; ++c) s.push_back(is_black({c, r}) ? '#' : '.');
    }
    return s;
}

NeighborhoodConfig extract_config(const BinaryImage& img, PixelCoord p) {
    if (!img.is_black(p)) {
        throw std::invalid_argument("extract_config: pixel (" + std::to_string(p.col) + "," +
                                    std::to_string(p.row) + ") is not black");
    }
    std::uint8_t mask = 0;
    for (int i = 0; i < 8; ++i) {
        if (img.is_black(p + kNeighborOffsets[i])) mask |= static_cast<std::uint8_t>(1u << i);
    }
    return {mask};
}

BinaryImage paint_config(NeighborhoodConfig c, int canvas) {
    if (canvas < 3 || canvas % 2 == 0) {
        throw std::invalid_argument("paint_config: canvas must be odd and >= 3");
    }
    BinaryImage img(canvas, canvas);
    const PixelCoord center = canvas_center(canvas);
    img.set(center, Color::Black);
    for (int i = 0; i < 8; ++i) {
        if (c[i]) img.set(center + kNeighborOffsets[i], Color::Black);
    }
    return img;
}

BinaryImage random_image(int width, int height, std::mt19937_64& rng) {
    BinaryImage img(width, height);
    std::uint64_t bits = 0;
    int left = 0;
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            if (left == 0) {
                bits = rng();
                left = 64;
            }
            if (bits & 1u) img.set({c, r}, Color::Black);
            bits >>= 1;
            --left;
        }
    }
    return img;
}

std::optional<int> Labeling::label(PixelCoord p) const {
    if (p.col < 0 || p.row < 0 || p.col >= width || p.row >= height) return std::nullopt;
    const int id = labels[static_cast<std::size_t>(p.row) * static_cast<std::size_t>(width) +
                          static_cast<std::size_t>(p.col)];
    if (id < 0) return std::nullopt;
    return id;
}

Labeling label_components(const BinaryImage& img, Adjacency adjacency, Color color) {
    // Flood fill over the image padded by one white ring. Padding cells are
    // only ever reachable when labeling white.
    const int pw = img.width() + 2;
    const int ph = img.height() + 2;
    const auto cells = static_cast<std::size_t>(pw) * static_cast<std::size_t>(ph);
    std::vector<int> ids(cells, -1);
    std::vector<std::uint8_t> wanted(cells, color == Color::White ? 1 : 0);
    for (int r = 0; r < img.height(); ++r) {
        for (int c = 0; c < img.width(); ++c) {
            wanted[static_cast<std::size_t>(r + 1) * pw + static_cast<std::size_t>(c + 1)] =
                img.at({c, r}) == color ? 1 : 0;
        }
    }

    const int step = adjacency == Adjacency::Four ? 2 : 1;
    std::vector<std::size_t> stack;
    int next_id = 0;
    auto flood = [&](std::size_t seed) {
        ids[seed] = next_id;
        stack.push_back(seed);
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            const int cr = static_cast<int>(cur / pw);
            const int cc = static_cast<int>(cur % pw);
            for (int i = 0; i < 8; i += step) {
                const int nc = cc + kNeighborOffsets[i].col;
                const int nr = cr + kNeighborOffsets[i].row;
                if (nc < 0 || nr < 0 || nc >= pw || nr >= ph) continue;
                const auto k = static_cast<std::size_t>(nr) * pw + static_cast<std::size_t>(nc);
                if (wanted[k] && ids[k] < 0) {
                    ids[k] = next_id;
                    stack.push_back(k);
                }
            }
        }
        ++next_id;
    };

    Labeling out;
    out.width = img.width();
    out.height = img.height();
    if (color == Color::White) {
        // The ring is 4-connected, so one fill from a corner claims all of it.
        flood(0);
        out.includes_background = true;
    }
    for (std::size_t k = 0; k < cells; ++k) {
        if (wanted[k] && ids[k] < 0) flood(k);
    }
    out.count = next_id;

    out.labels.assign(static_cast<std::size_t>(img.width()) * img.height(), -1);
    for (int r = 0; r < img.height(); ++r) {
        for (int c = 0; c < img.width(); ++c) {
            out.labels[static_cast<std::size_t>(r) * img.width() + c] =
                ids[static_cast<std::size_t>(r + 1) * pw + static_cast<std::size_t>(c + 1)];
        }
    }
    return out;
}

int count_components(const BinaryImage& img, Adjacency adjacency, Color color) {
    return label_components(img, adjacency, color).count;
}

}  // namespace topo2d
