#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>
#include <string>

#include "topo2d/pbm.hpp"

using namespace topo2d;
using namespace std::string_literals;

TEST_CASE("read plain PBM") {
    const BinaryImage img = read_pbm("P1 2 2 1 0 0 1");
    CHECK(img.width() == 2);
    CHECK(img.height() == 2);
    CHECK(img == BinaryImage::from_rows({"#.", ".#"}));

    // digits need no separators in the raster, and comments are skipped
    const BinaryImage packed = read_pbm("P1\n# a comment\n3 2 # trailing\n101\n010\n");
    CHECK(packed == BinaryImage::from_rows({"#.#", ".#."}));
}

TEST_CASE("read raw PBM") {
    const BinaryImage img = read_pbm("P4\n8 1\n\x80"s);
    CHECK(img.width() == 8);
    CHECK(img.is_black({0, 0}));
    CHECK(img.black_count() == 1);

    // padding bits beyond the width are ignored
    const BinaryImage padded = read_pbm("P4 3 2\n\xFF\x40"s);
    CHECK(padded == BinaryImage::from_rows({"###", ".#."}));

    const BinaryImage zero = read_pbm("P4 9 1\n\x00\x80"s);
    CHECK(zero.is_black({8, 0}));
    CHECK(zero.black_count() == 1);
}

TEST_CASE("parse errors carry byte offsets") {
    auto offset_of = [](std::string_view data) -> long {
        try {
            read_pbm(data);
        } catch (const PbmError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK_THROWS_WITH_AS(read_pbm("P5 1 1 255 \x01"s), doctest::Contains("unsupported magic"), PbmError);
    CHECK_THROWS_AS(read_pbm(""), PbmError);
    CHECK_THROWS_AS(read_pbm("Q1 1 1 1"), PbmError);
    CHECK_THROWS_AS(read_pbm("P12 1 1"), PbmError);
    CHECK(offset_of("P1 0 1") == 3);
    CHECK(offset_of("P1 2 x") == 5);
    CHECK(offset_of("P1 2 2 1 0 1") == 12);  // truncated raster
    CHECK(offset_of("P1 1 1 2") == 7);
    CHECK(offset_of("P4 8 2\n\x01"s) == 8);
    CHECK_THROWS_AS(read_pbm("P1 2"), PbmError);
    CHECK_THROWS_AS(read_pbm("P4 8 1"), PbmError);
}

TEST_CASE("write PBM") {
    CHECK(write_pbm(BinaryImage(1, 1, Color::Black), PbmVariant::P1) == "P1\n1 1\n1\n");
    CHECK(write_pbm(BinaryImage(1, 1), PbmVariant::P1) == "P1\n1 1\n0\n");
    CHECK(write_pbm(BinaryImage::from_rows({"#.#", ".#."}), PbmVariant::P4) == "P4\n3 2\n\xA0\x40"s);
}

TEST_CASE("round trip on random images") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        const int w = 1 + static_cast<int>(rng() % 40);
        const int h = 1 + static_cast<int>(rng() % 40);
        const BinaryImage img = random_image(w, h, rng);
        CHECK(read_pbm(write_pbm(img, PbmVariant::P1)) == img);
        CHECK(read_pbm(write_pbm(img, PbmVariant::P4)) == img);
    }
}

TEST_CASE("file helpers") {
    const auto dir = std::filesystem::temp_directory_path() / "topo2d_test_pbm";
    std::filesystem::create_directories(dir);
    const BinaryImage img = BinaryImage::from_rows({"##..", ".##.", "..##"});
    write_pbm_file(dir / "a.pbm", img, PbmVariant::P4);
    CHECK(read_pbm_file(dir / "a.pbm") == img);
    CHECK_THROWS_AS(read_pbm_file(dir / "missing.pbm"), std::runtime_error);
    std::filesystem::remove_all(dir);
}
