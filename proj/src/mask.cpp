#include "vpix/mask.hpp"

#include "vpix/error.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace vpix {

const char* to_string(ShapeKind kind)
{
    switch (kind) {
    case ShapeKind::triangular: return "triangular";
    case ShapeKind::rectangular: return "rectangular";
    case ShapeKind::custom: return "custom";
    }
    return "custom";
}

ShapeKind parse_shape_kind(const std::string& s)
{
    if (s == "triangular") return ShapeKind::triangular;
    if (s == "rectangular") return ShapeKind::rectangular;
    if (s == "custom") return ShapeKind::custom;
    throw ParseError("unknown shape kind '" + s + "'");
}

MaskCells rotate_cells_cw(const MaskCells& cells)
{
    MaskCells out;
    for (int r = 0; r < kBlockSize; ++r)
        for (int c = 0; c < kBlockSize; ++c)
            out(c, kBlockSize - 1 - r) = cells(r, c);
    return out;
}

namespace {

const char* id_prefix(ShapeKind kind)
{
    return kind == ShapeKind::triangular ? "tri" : "rect";
}

std::string builtin_id(ShapeKind kind, int orientation)
{
    return std::string(id_prefix(kind)) + "-" + std::to_string(orientation);
}

}  // namespace

Mask rotate90(const Mask& m)
{
    Mask out = m;
    out.cells = rotate_cells_cw(m.cells);
    out.orientation = (m.orientation + 90) % 360;
    if (m.shape_kind != ShapeKind::custom && m.id == builtin_id(m.shape_kind, m.orientation))
        out.id = builtin_id(m.shape_kind, out.orientation);
    return out;
}

bool region_connected(const MaskCells& cells, int bit)
{
    std::array<bool, kBlockSize * kBlockSize> seen{};
    std::vector<int> stack;
    int total = 0;
    for (int i = 0; i < kBlockSize * kBlockSize; ++i) {
        if (cells(i / kBlockSize, i % kBlockSize) != bit) continue;
        ++total;
        if (stack.empty() && !seen[i]) {
            stack.push_back(i);
            seen[i] = true;
        }
    }
    if (total == 0) return false;

    int reached = 0;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        ++reached;
        const int r = i / kBlockSize, c = i % kBlockSize;
        const int nbr[4][2] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
        for (const auto& [nr, nc] : nbr) {
            if (nr < 0 || nr >= kBlockSize || nc < 0 || nc >= kBlockSize) continue;
            const int j = nr * kBlockSize + nc;
            if (!seen[j] && cells(nr, nc) == bit) {
                seen[j] = true;
                stack.push_back(j);
            }
        }
    }
    return reached == total;
}

void validate(const Mask& m)
{
    if (((m.cells != 0) && (m.cells != 1)).any())
        throw ValidationError("mask '" + m.id + "': cells must be 0 or 1");
    if (m.region_size(0) == 0 || m.region_size(1) == 0)
        throw ValidationError("mask '" + m.id + "': empty region");
    if (m.orientation % 90 != 0 || m.orientation < 0 || m.orientation >= 360)
        throw ValidationError("mask '" + m.id + "': orientation must be 0, 90, 180 or 270");
}

MaskSet builtin_masks()
{
    Mask tri;
    tri.shape_kind = ShapeKind::triangular;
    tri.id = builtin_id(tri.shape_kind, 0);
    // region 0: strict lower-left triangle (15 cells)
    for (int r = 0; r < kBlockSize; ++r)
        for (int c = 0; c < kBlockSize; ++c)
            tri.cells(r, c) = c < r ? 0 : 1;

    Mask rect;
    rect.shape_kind = ShapeKind::rectangular;
    rect.id = builtin_id(rect.shape_kind, 0);
    // region 0: rows 0-1 plus the first three cells of row 2 (15 cells)
    rect.cells.setOnes();
    rect.cells.topRows(2).setZero();
    rect.cells.row(2).head(3).setZero();

    MaskSet set;
    set.provenance = MaskSet::Provenance::builtin;
    for (Mask base : {tri, rect}) {
        for (int k = 0; k < 4; ++k) {
            set.masks.push_back(base);
            base = rotate90(base);
        }
    }
    return set;
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

MaskSet parse_masks(std::istream& in)
{
    MaskSet set;
    set.provenance = MaskSet::Provenance::file;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const int header_line = line_no;
        std::istringstream hs(line);
        std::string keyword, orientation_text, extra;
        Mask m;
        std::string kind;
        if (!(hs >> keyword >> m.id >> kind >> orientation_text) || keyword != "mask" || (hs >> extra))
            throw ParseError("expected 'mask <id> <shape_kind> <orientation>'", line_no);
        try {
            m.shape_kind = parse_shape_kind(kind);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
        try {
            std::size_t used = 0;
            m.orientation = std::stoi(orientation_text, &used);
            if (used != orientation_text.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("bad orientation '" + orientation_text + "'", line_no);
        }

        int row = 0;
        while (row < kBlockSize) {
            if (!std::getline(in, raw)) throw ParseError("mask '" + m.id + "' has fewer than 6 rows", line_no);
            ++line_no;
            const std::string cells = trim(raw);
            if (!cells.empty() && cells.front() == '#') continue;
            if (cells.size() != static_cast<std::size_t>(kBlockSize))
                throw ParseError("mask row must have exactly 6 cells", line_no);
            for (int c = 0; c < kBlockSize; ++c) {
                if (cells[c] != '0' && cells[c] != '1')
                    throw ParseError("mask cells must be '0' or '1'", line_no);
                m.cells(row, c) = static_cast<std::uint8_t>(cells[c] - '0');
            }
            ++row;
        }
        try {
            validate(m);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), header_line);
        }
        set.masks.push_back(std::move(m));
    }
    if (set.masks.empty()) throw ParseError("no masks found");
    return set;
}

void write_masks(const MaskSet& set, std::ostream& out)
{
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Mask& m = set[i];
        if (i > 0) out << '\n';
        out << "mask " << m.id << ' ' << to_string(m.shape_kind) << ' ' << m.orientation << '\n';
        for (int r = 0; r < kBlockSize; ++r) {
            for (int c = 0; c < kBlockSize; ++c) out << static_cast<char>('0' + m.cells(r, c));
            out << '\n';
        }
    }
}

MaskSet load_masks(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open mask file " + path.string());
    return parse_masks(in);
}

void save_masks(const MaskSet& set, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw IoError("cannot write mask file " + path.string());
    write_masks(set, out);
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace vpix
