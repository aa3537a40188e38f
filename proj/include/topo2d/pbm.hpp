#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "topo2d/grid.hpp"

namespace topo2d {

enum class PbmVariant { P1, P4 };

/// Malformed PBM input; `offset()` is the byte position of the problem.
class PbmError : public std::runtime_error {
public:
    PbmError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses P1 (plain) or P4 (raw) PBM. Bit 1 is black. Header comments start
/// with '#' and run to end of line.
BinaryImage read_pbm(std::string_view bytes);

/// P1 writes one image row per line; P4 packs rows MSB-first, zero-padded to
/// a byte boundary.
std::string write_pbm(const BinaryImage& img, PbmVariant variant);

/// Throws std::runtime_error if the file cannot be opened, PbmError if it
/// does not parse.
BinaryImage read_pbm_file(const std::filesystem::path& path);
void write_pbm_file(const std::filesystem::path& path, const BinaryImage& img, PbmVariant variant);

}  // namespace topo2d
