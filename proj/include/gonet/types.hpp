#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gonet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input bytes (SGF syntax). Carries the byte offset of the failure.
struct ParseError : Error {
    ParseError(const std::string& msg, size_t offset)
        : Error(msg + " (byte " + std::to_string(offset) + ")"), offset(offset) {}
    size_t offset;
};

// Well-formed input describing an impossible or unsupported game
// (bad board size, coordinate off the board, illegal move on replay, ...).
struct DataError : Error {
    using Error::Error;
};

// Iterative solver or eigensolver failure.
struct NumericError : Error {
    using Error::Error;
};

enum class Color : uint8_t { Black = 0, White = 1 };

inline Color opposite(Color c) {
    return c == Color::Black ? Color::White : Color::Black;
}

inline char color_char(Color c) {
    return c == Color::Black ? 'B' : 'W';
}

// Board intersection, 1-based: h = column, v = row, both in [1,19].
struct Coord {
    int h = 0;
    int v = 0;

    bool operator==(const Coord&) const = default;
    auto operator<=>(const Coord&) const = default;
};

// max{|dh|,|dv|}, the proximity metric used to link consecutive moves.
inline int chebyshev(Coord a, Coord b) {
    int dh = a.h > b.h ? a.h - b.h : b.h - a.h;
    int dv = a.v > b.v ? a.v - b.v : b.v - a.v;
    return dh > dv ? dh : dv;
}

struct MoveAction {
    Color color = Color::Black;
    bool is_pass = false;
    Coord at;  // meaningless when is_pass

    bool operator==(const MoveAction&) const = default;
};

struct GameRecord {
    std::string id;  // "<source>#<index in collection>"
    int board_size = 19;
    std::vector<Coord> setup_black;
    std::vector<Coord> setup_white;
    std::vector<MoveAction> moves;
    std::map<std::string, std::string> metadata;
};

struct Corpus {
    struct Source {
        std::string path;
        size_t n_games = 0;
    };

    std::vector<GameRecord> games;
    std::vector<Source> sources;
    std::vector<std::string> warnings;  // skipped files in non-strict mode

    // FNV-1a 64 over the canonical re-serialization of every game.
    uint64_t digest() const;
};

std::string digest_hex(uint64_t digest);

}  // namespace gonet
