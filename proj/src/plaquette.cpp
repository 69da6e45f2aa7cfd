#include "gonet/plaquette.hpp"

#include <algorithm>

namespace gonet {

const char* geometry_name(Geometry g) {
    switch (g) {
        case Geometry::Interior: return "interior";
        case Geometry::Edge: return "edge";
        case Geometry::Corner: return "corner";
    }
    return "?";
}

const std::array<std::array<int, 9>, 8>& dihedral_tables() {
    // image[r][c] = p[f(r,c)]; the 8 maps are the rotations by 0/90/180/270
    // and the four reflections (columns, rows, both diagonals).
    static const std::array<std::array<int, 9>, 8> tables = [] {
        using Map = std::pair<int, int> (*)(int, int);
        const Map maps[8] = {
            [](int r, int c) { return std::pair{r, c}; },
            [](int r, int c) { return std::pair{2 - c, r}; },
            [](int r, int c) { return std::pair{2 - r, 2 - c}; },
            [](int r, int c) { return std::pair{c, 2 - r}; },
            [](int r, int c) { return std::pair{r, 2 - c}; },
            [](int r, int c) { return std::pair{2 - r, c}; },
            [](int r, int c) { return std::pair{c, r}; },
            [](int r, int c) { return std::pair{2 - c, 2 - r}; },
        };
        std::array<std::array<int, 9>, 8> out{};
        for (int t = 0; t < 8; ++t)
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    auto [sr, sc] = maps[t](r, c);
                    out[t][r * 3 + c] = sr * 3 + sc;
                }
        return out;
    }();
    return tables;
}

RelativePattern relativize(const RawPattern& raw, Color mover) {
    if (raw[4] != Cell::Empty)
        throw DataError("relativize: center cell is not empty");
    Cell friendly = cell_of(mover);
    RelativePattern rel;
    for (int i = 0; i < 9; ++i) {
        switch (raw[i]) {
            case Cell::Empty: rel.cells[i] = RelCell::Empty; break;
            case Cell::OffBoard: rel.cells[i] = RelCell::OffBoard; break;
            default:
                rel.cells[i] = raw[i] == friendly ? RelCell::Friend : RelCell::Foe;
        }
    }
    return rel;
}

static RelativePattern apply_transform(const RelativePattern& p, const std::array<int, 9>& table) {
    RelativePattern out;
    for (int i = 0; i < 9; ++i)
        out.cells[i] = p.cells[table[i]];
    return out;
}

RelativePattern canonicalize(const RelativePattern& p) {
    RelativePattern best = p;
    for (const auto& table : dihedral_tables()) {
        RelativePattern image = apply_transform(p, table);
        if (image < best)
            best = image;
    }
    return best;
}

bool is_valid_pattern(const RelativePattern& p) {
    if (p.cells[4] != RelCell::Empty)
        return false;
    uint16_t mask = 0;
    for (int i = 0; i < 9; ++i)
        if (p.cells[i] == RelCell::OffBoard)
            mask |= 1u << i;
    // Valid OffBoard footprints: none, one full side, or a corner L of 5.
    static const uint16_t sides[4] = {0b000000111, 0b111000000, 0b001001001, 0b100100100};
    if (mask == 0)
        return true;
    for (uint16_t side : sides)
        if (mask == side)
            return true;
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < 4; ++b)
            if (mask == (sides[a] | sides[b]))
                return true;
    return false;
}

static Geometry geometry_of(const RelativePattern& p) {
    int off = static_cast<int>(
        std::count(p.cells.begin(), p.cells.end(), RelCell::OffBoard));
    switch (off) {
        case 0: return Geometry::Interior;
        case 3: return Geometry::Edge;
        case 5: return Geometry::Corner;
    }
    throw DataError("pattern with invalid OffBoard footprint");
}

ClassTable ClassTable::enumerate() {
    // Free cells per geometry, with OffBoard fixed in one orientation
    // (side = bottom row, corner = bottom row + left column); symmetry
    // collapses the other orientations.
    struct Template {
        std::array<RelCell, 9> base;
        std::array<int, 8> free;
        int n_free;
    };
    const RelCell E = RelCell::Empty, X = RelCell::OffBoard;
    const Template templates[3] = {
        {{E, E, E, E, E, E, E, E, E}, {0, 1, 2, 3, 5, 6, 7, 8}, 8},
        {{E, E, E, E, E, E, X, X, X}, {0, 1, 2, 3, 5, 0, 0, 0}, 5},
        {{X, E, E, X, E, E, X, X, X}, {1, 2, 5, 0, 0, 0, 0, 0}, 3},
    };

    std::vector<RelativePattern> canonicals;
    std::unordered_map<uint32_t, bool> seen;
    for (const Template& tpl : templates) {
        int total = 1;
        for (int i = 0; i < tpl.n_free; ++i)
            total *= 3;
        for (int code = 0; code < total; ++code) {
            RelativePattern p;
            p.cells = tpl.base;
            int rest = code;
            for (int i = 0; i < tpl.n_free; ++i) {
                p.cells[tpl.free[i]] = static_cast<RelCell>(rest % 3);
                rest /= 3;
            }
            RelativePattern canon = canonicalize(p);
            if (seen.emplace(canon.encode(), true).second)
                canonicals.push_back(canon);
        }
    }
    std::sort(canonicals.begin(), canonicals.end());

    ClassTable table;
    table.classes_.reserve(canonicals.size());
    for (size_t id = 0; id < canonicals.size(); ++id) {
        PlaquetteClass cls;
        cls.id = static_cast<uint16_t>(id);
        cls.canonical = canonicals[id];
        cls.geometry = geometry_of(canonicals[id]);
        std::vector<uint32_t> images;
        for (const auto& t : dihedral_tables())
            images.push_back(apply_transform(canonicals[id], t).encode());
        std::sort(images.begin(), images.end());
        cls.orbit_size = static_cast<uint8_t>(
            std::unique(images.begin(), images.end()) - images.begin());
        table.index_.emplace(canonicals[id].encode(), cls.id);
        table.classes_.push_back(cls);
    }
    return table;
}

uint16_t ClassTable::class_of(const RelativePattern& p) const {
    auto it = index_.find(canonicalize(p).encode());
    if (it == index_.end())
        throw DataError("pattern not in class table (corrupt board state or invalid pattern)");
    return it->second;
}

std::string cells_string(const RelativePattern& p) {
    static const char glyph[4] = {'.', 'X', 'O', '#'};
    std::string out(9, '.');
    for (int i = 0; i < 9; ++i)
        out[i] = glyph[static_cast<int>(p.cells[i])];
    return out;
}

std::string render_ascii(const RelativePattern& p) {
    std::string flat = cells_string(p);
    flat[4] = '+';
    std::string out;
    for (int r = 0; r < 3; ++r) {
        out.append(flat, r * 3, 3);
        out.push_back('\n');
    }
    return out;
}

std::string render_ascii(const PlaquetteClass& c) {
    return render_ascii(c.canonical);
}

}  // namespace gonet
