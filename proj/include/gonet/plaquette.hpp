#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "gonet/board.hpp"
#include "gonet/types.hpp"

namespace gonet {

// Mover-relative cell state. The numeric order Empty < Friend < Foe <
// OffBoard is the comparison order for canonical forms.
enum class RelCell : uint8_t { Empty = 0, Friend = 1, Foe = 2, OffBoard = 3 };

enum class Geometry : uint8_t { Interior = 0, Edge = 1, Corner = 2 };

const char* geometry_name(Geometry g);

// 3x3 mover-relative pattern, row-major, center (index 4) always Empty.
struct RelativePattern {
    std::array<RelCell, 9> cells{};

    // Base-4 big-endian digit string; total order used for canonical forms.
    uint32_t encode() const {
        uint32_t code = 0;
        for (RelCell c : cells)
            code = code * 4 + static_cast<uint32_t>(c);
        return code;
    }

    bool operator==(const RelativePattern&) const = default;
    auto operator<=>(const RelativePattern&) const = default;
};

// The 8 symmetries of the square as position permutations: image(p)[i] =
// p[table[i]] for each transform's table.
const std::array<std::array<int, 9>, 8>& dihedral_tables();

// Mover's stones become Friend, opponent's Foe. Center must be Empty.
RelativePattern relativize(const RawPattern& raw, Color mover);

// Lexicographically smallest image under the 8 square symmetries.
RelativePattern canonicalize(const RelativePattern& p);

// True iff the center is Empty and the OffBoard cells form a footprint a
// 19x19 neighborhood read can produce: none, one full side, or a corner L.
bool is_valid_pattern(const RelativePattern& p);

struct PlaquetteClass {
    uint16_t id = 0;
    RelativePattern canonical;
    Geometry geometry = Geometry::Interior;
    uint8_t orbit_size = 1;  // distinct images under the 8 symmetries
};

// The complete census of canonical plaquette classes. Ids are assigned in
// ascending order of canonical encodings, so two enumerations are identical.
class ClassTable {
public:
    static ClassTable enumerate();

    uint16_t class_of(const RelativePattern& p) const;
    uint16_t class_of(const RawPattern& raw, Color mover) const {
        return class_of(relativize(raw, mover));
    }

    const PlaquetteClass& at(uint16_t id) const { return classes_.at(id); }
    const std::vector<PlaquetteClass>& classes() const { return classes_; }
    size_t size() const { return classes_.size(); }

private:
    std::vector<PlaquetteClass> classes_;
    std::unordered_map<uint32_t, uint16_t> index_;
};

// Three-line diagram: '+' mover's point, 'X' Friend, 'O' Foe, '.' Empty,
// '#' off board.
std::string render_ascii(const RelativePattern& p);
std::string render_ascii(const PlaquetteClass& c);

// One-line cell string over ".XO#" (census JSON uses it).
std::string cells_string(const RelativePattern& p);

}  // namespace gonet
