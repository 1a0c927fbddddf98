#pragma once

#include "vpix/image.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace vpix {

enum class ShapeKind { triangular, rectangular, custom };

/// 6x6 grid of region bits (0 or 1).
using MaskCells = Block<std::uint8_t>;

/// A two-region partition of a 6x6 block.
struct Mask {
    MaskCells cells = MaskCells::Zero();
    ShapeKind shape_kind = ShapeKind::custom;
    int orientation = 0;  ///< degrees, one of 0/90/180/270
    std::string id;

    int region_size(int bit) const { return static_cast<int>((cells == bit).count()); }

    friend bool operator==(const Mask& a, const Mask& b)
    {
        return (a.cells == b.cells).all() && a.shape_kind == b.shape_kind &&
               a.orientation == b.orientation && a.id == b.id;
    }
};

struct MaskSet {
    enum class Provenance { builtin, file };

    std::vector<Mask> masks;
    Provenance provenance = Provenance::builtin;

    std::size_t size() const { return masks.size(); }
    bool empty() const { return masks.empty(); }
    const Mask& operator[](std::size_t i) const { return masks[i]; }

    /// Compares the masks only; provenance is not part of a set's value.
    friend bool operator==(const MaskSet& a, const MaskSet& b) { return a.masks == b.masks; }
};

const char* to_string(ShapeKind kind);
ShapeKind parse_shape_kind(const std::string& s);

/// Clockwise quarter turn: cell (r, c) moves to (c, 5 - r).
MaskCells rotate_cells_cw(const MaskCells& cells);

/// Rotated copy with the orientation advanced by 90 (mod 360). Built-in ids follow the rotation.
Mask rotate90(const Mask& m);

/// True when every cell with value `bit` is reachable from every other through 4-neighbours.
bool region_connected(const MaskCells& cells, int bit);

/// Throws ValidationError unless both regions are nonempty and every cell is 0 or 1.
void validate(const Mask& m);

/// tri-0, tri-90, tri-180, tri-270, rect-0, rect-90, rect-180, rect-270.
MaskSet builtin_masks();

/// Text format: `mask <id> <shape_kind> <orientation>` followed by six rows of six 0/1 chars.
/// Masks are separated by blank lines; lines starting with '#' are comments.
MaskSet parse_masks(std::istream& in);
void write_masks(const MaskSet& set, std::ostream& out);

MaskSet load_masks(const std::filesystem::path& path);
void save_masks(const MaskSet& set, const std::filesystem::path& path);

}  // namespace vpix
