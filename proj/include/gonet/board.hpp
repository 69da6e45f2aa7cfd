#pragma once

#include <array>
#include <vector>

#include "gonet/types.hpp"

namespace gonet {

enum class Cell : uint8_t { Empty = 0, Black = 1, White = 2, OffBoard = 3 };

inline Cell cell_of(Color c) {
    return c == Color::Black ? Cell::Black : Cell::White;
}

// 3x3 window around a coordinate, row-major over rows v-1..v+1 and columns
// h-1..h+1; the center is element 4. Cells outside the board are OffBoard.
using RawPattern = std::array<Cell, 9>;

struct ChainInfo {
    std::vector<Coord> stones;
    int liberties = 0;
};

// 19x19 replay board: placement with capture resolution, chain/liberty
// queries, 3x3 neighborhood reads. One board per game, mutated only by its
// owning replay.
class Board {
public:
    static constexpr int kSize = 19;

    Board() { grid_.fill(Cell::Empty); }

    Cell at(Coord c) const {
        if (c.h < 1 || c.h > kSize || c.v < 1 || c.v > kSize)
            return Cell::OffBoard;
        return grid_[index(c)];
    }

    // Direct placement for setup stones (AB/AW): no capture resolution.
    void set(Coord c, Cell cell);

    // Places a stone, removes every adjacent opposing chain left without
    // liberties, and returns the captured coordinates. Throws DataError on an
    // occupied target or suicide; the board is unchanged in both cases.
    std::vector<Coord> place(Color color, Coord at);

    // Maximal same-color 4-connected chain through `at` plus its liberty
    // count. Throws DataError if `at` is not a stone.
    ChainInfo chain_and_liberties(Coord at) const;

    RawPattern neighborhood(Coord center) const;

    bool operator==(const Board&) const = default;

private:
    static int index(Coord c) { return (c.v - 1) * kSize + (c.h - 1); }

    std::array<Cell, kSize * kSize> grid_;
};

}  // namespace gonet
