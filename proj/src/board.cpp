#include "gonet/board.hpp"

#include <algorithm>

namespace gonet {

namespace {

constexpr std::array<std::pair<int, int>, 4> kAdjacent{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

std::string coord_str(Coord c) {
    return "(" + std::to_string(c.h) + "," + std::to_string(c.v) + ")";
}

}  // namespace

void Board::set(Coord c, Cell cell) {
    if (at(c) == Cell::OffBoard)
        throw DataError("setup coordinate " + coord_str(c) + " off the board");
    grid_[index(c)] = cell;
}

ChainInfo Board::chain_and_liberties(Coord start) const {
    Cell color = at(start);
    if (color != Cell::Black && color != Cell::White)
        throw DataError("chain query on non-stone cell " + coord_str(start));

    ChainInfo info;
    std::array<bool, kSize * kSize> seen{};
    std::array<bool, kSize * kSize> liberty_seen{};
    std::vector<Coord> stack{start};
    seen[index(start)] = true;
    while (!stack.empty()) {
        Coord c = stack.back();
        stack.pop_back();
        info.stones.push_back(c);
        for (auto [dh, dv] : kAdjacent) {
            Coord n{c.h + dh, c.v + dv};
            Cell cell = at(n);
            if (cell == Cell::OffBoard)
                continue;
            if (cell == Cell::Empty) {
                if (!liberty_seen[index(n)]) {
                    liberty_seen[index(n)] = true;
                    ++info.liberties;
                }
            } else if (cell == color && !seen[index(n)]) {
                seen[index(n)] = true;
                stack.push_back(n);
            }
        }
    }
    std::sort(info.stones.begin(), info.stones.end());
    return info;
}

std::vector<Coord> Board::place(Color color, Coord target) {
    if (at(target) == Cell::OffBoard)
        throw DataError("move " + coord_str(target) + " off the board");
    if (at(target) != Cell::Empty)
        throw DataError("move onto occupied intersection " + coord_str(target));

    grid_[index(target)] = cell_of(color);

    // All adjacent opposing chains with zero liberties come off together,
    // before the mover's own liberty check.
    Cell enemy = cell_of(opposite(color));
    std::vector<Coord> captured;
    std::array<bool, kSize * kSize> in_dead_chain{};
    for (auto [dh, dv] : kAdjacent) {
        Coord n{target.h + dh, target.v + dv};
        if (at(n) != enemy || in_dead_chain[index(n)])
            continue;
        ChainInfo chain = chain_and_liberties(n);
        if (chain.liberties == 0) {
            for (Coord c : chain.stones) {
                in_dead_chain[index(c)] = true;
                captured.push_back(c);
            }
        }
    }
    for (Coord c : captured)
        grid_[index(c)] = Cell::Empty;

    if (captured.empty() && chain_and_liberties(target).liberties == 0) {
        grid_[index(target)] = Cell::Empty;
        throw DataError("suicide move at " + coord_str(target));
    }
    std::sort(captured.begin(), captured.end());
    return captured;
}

RawPattern Board::neighborhood(Coord center) const {
    RawPattern pattern;
    int i = 0;
    for (int dv = -1; dv <= 1; ++dv)
        for (int dh = -1; dh <= 1; ++dh)
            pattern[i++] = at(Coord{center.h + dh, center.v + dv});
    return pattern;
}

}  // namespace gonet
