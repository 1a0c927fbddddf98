#include "vpix/error.hpp"
#include "vpix/mask.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace vpix;

TEST_CASE("builtin set has eight distinct 15/21 masks")
{
    const MaskSet set = builtin_masks();
    REQUIRE(set.size() == 8);
    CHECK(set.provenance == MaskSet::Provenance::builtin);

    const char* ids[] = {"tri-0", "tri-90", "tri-180", "tri-270", "rect-0", "rect-90", "rect-180", "rect-270"};
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Mask& m = set[i];
        CAPTURE(m.id);
        CHECK(m.id == ids[i]);
        CHECK(m.region_size(0) == 15);
        CHECK(m.region_size(1) == 21);
        CHECK(m.region_size(0) + m.region_size(1) == 36);
        CHECK(region_connected(m.cells, 0));
        CHECK(region_connected(m.cells, 1));
        CHECK_NOTHROW(validate(m));
        for (std::size_t j = i + 1; j < set.size(); ++j) CHECK_FALSE((m.cells == set[j].cells).all());
    }
}

TEST_CASE("triangular base is the strict lower-left triangle")
{
    const Mask tri = builtin_masks()[0];
    int strict_lower = 0;
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            CHECK(tri.cells(r, c) == (c < r ? 0 : 1));
            strict_lower += c < r;
        }
    CHECK(strict_lower == 1 + 2 + 3 + 4 + 5);
    CHECK(tri.shape_kind == ShapeKind::triangular);
    CHECK(tri.orientation == 0);
}

TEST_CASE("rectangular base: rows 0-1 plus three cells of row 2")
{
    const Mask rect = builtin_masks()[4];
    CHECK((rect.cells.topRows(2) == 0).all());
    CHECK((rect.cells.row(2).head(3) == 0).all());
    CHECK((rect.cells.row(2).tail(3) == 1).all());
    CHECK((rect.cells.bottomRows(3) == 1).all());
}

TEST_CASE("rotate90 matches transpose-then-mirror on every single cell")
{
    // Clockwise rotation written another way: transpose, then reverse each row.
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            MaskCells one = MaskCells::Zero();
            one(r, c) = 1;
            const MaskCells expected = one.transpose().rowwise().reverse();
            const MaskCells got = rotate_cells_cw(one);
            CHECK((got == expected).all());
            CHECK(got(c, 5 - r) == 1);
            CHECK(got.cast<int>().sum() == 1);
        }

    MaskCells corner = MaskCells::Zero();
    corner(0, 5) = 1;
    CHECK(rotate_cells_cw(corner)(5, 5) == 1);
}

TEST_CASE("rotate90 four times is the identity and tracks orientation")
{
    for (const Mask& m : builtin_masks().masks) {
        Mask r = m;
        for (int i = 0; i < 4; ++i) {
            r = rotate90(r);
            CHECK(r.region_size(0) == m.region_size(0));
        }
        CHECK(r == m);
    }
    const Mask t90 = rotate90(builtin_masks()[0]);
    CHECK(t90.id == "tri-90");
    CHECK(t90.orientation == 90);
    CHECK((t90.cells == builtin_masks()[1].cells).all());
}

TEST_CASE("region_connected detects fragments")
{
    MaskCells cells = MaskCells::Ones();
    cells(0, 0) = 0;
    cells(5, 5) = 0;
    CHECK_FALSE(region_connected(cells, 0));
    CHECK(region_connected(cells, 1));
    CHECK_FALSE(region_connected(MaskCells::Ones(), 0));
}

TEST_CASE("save then load reproduces the builtin set")
{
    const auto path = std::filesystem::temp_directory_path() / "vpix_masks_roundtrip.txt";
    const MaskSet set = builtin_masks();
    save_masks(set, path);
    const MaskSet loaded = load_masks(path);
    CHECK(loaded == set);
    CHECK(loaded.provenance == MaskSet::Provenance::file);

    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "mask tri-0 triangular 0");
    int zeros = 0;
    for (int r = 0; r < 6 && std::getline(in, line); ++r) zeros += static_cast<int>(std::count(line.begin(), line.end(), '0'));
    CHECK(zeros == 15);
    std::filesystem::remove(path);
}

TEST_CASE("parse a single triangular mask with comments")
{
    std::istringstream in("# Kirsch triangle\n"
                          "mask t triangular 0\n"
                          "111111\n011111\n001111\n000111\n000011\n000001\n");
    const MaskSet set = parse_masks(in);
    REQUIRE(set.size() == 1);
    CHECK(set[0].region_size(0) == 15);
    CHECK(set[0].region_size(1) == 21);
    CHECK((set[0].cells == builtin_masks()[0].cells).all());
}

TEST_CASE("mask parse and validation errors carry line numbers")
{
    SUBCASE("empty region")
    {
        std::istringstream in("\nmask z custom 0\n000000\n000000\n000000\n000000\n000000\n000000\n");
        try {
            parse_masks(in);
            FAIL("expected an error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(std::string(e.what()).find("empty region") != std::string::npos);
        }
    }
    SUBCASE("short row")
    {
        std::istringstream in("mask a custom 0\n01111\n");
        try {
            parse_masks(in);
            FAIL("expected an error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("bad character")
    {
        std::istringstream in("mask a custom 0\n011112\n");
        CHECK_THROWS_AS(parse_masks(in), ParseError);
    }
    SUBCASE("missing rows")
    {
        std::istringstream in("mask a custom 0\n011111\n011111\n");
        CHECK_THROWS_AS(parse_masks(in), ParseError);
    }
    SUBCASE("bad header")
    {
        std::istringstream in("mask a hexagonal 0\n");
        CHECK_THROWS_AS(parse_masks(in), ParseError);
        std::istringstream in2("mask a custom 45\n011111\n011111\n011111\n011111\n011111\n011111\n");
        CHECK_THROWS_AS(parse_masks(in2), ParseError);
    }
}

TEST_CASE("save to an unwritable path is an I/O error")
{
    CHECK_THROWS_AS(save_masks(builtin_masks(), "/nonexistent-dir/masks.txt"), IoError);
    CHECK_THROWS_AS(load_masks("/nonexistent-dir/masks.txt"), IoError);
}
