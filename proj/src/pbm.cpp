#include "topo2d/pbm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>

namespace topo2d {
namespace {

class Cursor {
public:
    explicit Cursor(std::string_view data) : data_(data) {}

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= data_.size(); }
    unsigned char peek() const { return static_cast<unsigned char>(data_[pos_]); }
    unsigned char take() { return static_cast<unsigned char>(data_[pos_++]); }

    void skip_space_and_comments() {
        while (!at_end()) {
            if (peek() == '#') {
                while (!at_end() && peek() != '\n' && peek() != '\r') ++pos_;
            } else if (std::isspace(peek())) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    int read_dimension(const char* what) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        if (at_end()) throw PbmError(std::string("truncated header, missing ") + what, pos_);
        if (!std::isdigit(peek())) throw PbmError(std::string("expected ") + what, pos_);
        long long v = 0;
        while (!at_end() && std::isdigit(peek())) {
            v = v * 10 + (take() - '0');
            if (v > std::numeric_limits<int>::max()) throw PbmError(std::string(what) + " too large", start);
        }
        if (v <= 0) throw PbmError(std::string("nonpositive ") + what, start);
        return static_cast<int>(v);
    }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

void read_plain_raster(Cursor& cur, BinaryImage& img) {
    for (int r = 0; r < img.height(); ++r) {
        for (int c = 0; c < img.width(); ++c) {
            cur.skip_space_and_comments();
            if (cur.at_end()) throw PbmError("truncated pixel data", cur.pos());
            const std::size_t at = cur.pos();
            const unsigned char ch = cur.take();
            if (ch == '1') {
                img.set({c, r}, Color::Black);
            } else if (ch != '0') {
                throw PbmError("invalid pixel character", at);
            }
        }
    }
}

void read_raw_raster(Cursor& cur, BinaryImage& img) {
    // Exactly one whitespace byte separates the header from the raster.
    if (cur.at_end()) throw PbmError("truncated header", cur.pos());
    if (!std::isspace(cur.peek())) throw PbmError("expected whitespace before raster", cur.pos());
    cur.take();
    const int row_bytes = (img.width() + 7) / 8;
    for (int r = 0; r < img.height(); ++r) {
        for (int b = 0; b < row_bytes; ++b) {
            if (cur.at_end()) throw PbmError("truncated pixel data", cur.pos());
            const unsigned char byte = cur.take();
            for (int bit = 0; bit < 8; ++bit) {
                const int c = b * 8 + bit;
                if (c >= img.width()) break;
                if (byte & (0x80u >> bit)) img.set({c, r}, Color::Black);
            }
        }
    }
}

}  // namespace

BinaryImage read_pbm(std::string_view bytes) {
    Cursor cur(bytes);
    if (bytes.size() < 2 || bytes[0] != 'P') throw PbmError("bad magic", 0);
    PbmVariant variant;
    if (bytes[1] == '1') {
        variant = PbmVariant::P1;
    } else if (bytes[1] == '4') {
        variant = PbmVariant::P4;
    } else {
        throw PbmError(std::string("unsupported magic P") + bytes[1], 0);
    }
    cur.take();
    cur.take();
    if (!cur.at_end() && !std::isspace(cur.peek()) && cur.peek() != '#') {
        throw PbmError("bad magic", 0);
    }
    const int width = cur.read_dimension("width");
    const int height = cur.read_dimension("height");
    BinaryImage img(width, height);
    if (variant == PbmVariant::P1) {
        read_plain_raster(cur, img);
    } else {
        read_raw_raster(cur, img);
    }
    return img;
}

std::string write_pbm(const BinaryImage& img, PbmVariant variant) {
    std::string out = variant == PbmVariant::P1 ? "P1\n" : "P4\n";
    out += std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n";
    if (variant == PbmVariant::P1) {
        out.reserve(out.size() + static_cast<std::size_t>(img.width() + 1) * img.height());
        for (int r = 0; r < img.height(); ++r) {
            for (int c = 0; c < img.width(); ++c) out.push_back(img.is_black({c, r}) ? '1' : '0');
            out.push_back('\n');
        }
        return out;
    }
    const int row_bytes = (img.width() + 7) / 8;
    for (int r = 0; r < img.height(); ++r) {
        for (int b = 0; b < row_bytes; ++b) {
            unsigned char byte = 0;
            for (int bit = 0; bit < 8; ++bit) {
                if (img.is_black({b * 8 + bit, r})) byte |= static_cast<unsigned char>(0x80u >> bit);
            }
            out.push_back(static_cast<char>(byte));
        }
    }
    return out;
}

BinaryImage read_pbm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    const std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return read_pbm(data);
}

void write_pbm_file(const std::filesystem::path& path, const BinaryImage& img, PbmVariant variant) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    const std::string data = write_pbm(img, variant);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace topo2d
