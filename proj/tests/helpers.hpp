#pragma once

#include <random>
#include <vector>

#include "gonet/board.hpp"
#include "gonet/netbuild.hpp"
#include "gonet/plaquette.hpp"
#include "gonet/types.hpp"

namespace gonet::test {

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

// Any orientation: fill the fixed-orientation template, then apply a random
// square symmetry.
inline RelativePattern random_valid_pattern(std::mt19937_64& rng) {
    RelativePattern p;
    int geometry = rand_int(rng, 0, 2);
    for (int i = 0; i < 9; ++i)
        p.cells[i] = static_cast<RelCell>(rand_int(rng, 0, 2));
    p.cells[4] = RelCell::Empty;
    if (geometry >= 1)
        for (int i : {6, 7, 8})
            p.cells[i] = RelCell::OffBoard;
    if (geometry == 2)
        for (int i : {0, 3})
            p.cells[i] = RelCell::OffBoard;
    const auto& table = dihedral_tables()[rand_int(rng, 0, 7)];
    RelativePattern out;
    for (int i = 0; i < 9; ++i)
        out.cells[i] = p.cells[table[i]];
    return out;
}

// Random position built from legal placements only.
inline Board random_board(std::mt19937_64& rng, int max_stones) {
    Board board;
    int placed = 0;
    int attempts = 0;
    while (placed < max_stones && attempts < max_stones * 10) {
        ++attempts;
        Coord c{rand_int(rng, 1, 19), rand_int(rng, 1, 19)};
        Color color = rng() % 2 ? Color::Black : Color::White;
        if (board.at(c) != Cell::Empty)
            continue;
        try {
            board.place(color, c);
            ++placed;
        } catch (const DataError&) {
        }
    }
    return board;
}

// Random legal game: stones at uniformly random empty points, skipping
// suicides. Alternates colors like a real record.
inline GameRecord random_game(std::mt19937_64& rng, int n_moves, const std::string& id) {
    GameRecord game;
    game.id = id;
    Board board;
    Color color = Color::Black;
    int placed = 0;
    int attempts = 0;
    while (placed < n_moves && attempts < n_moves * 20) {
        ++attempts;
        Coord c{rand_int(rng, 1, 19), rand_int(rng, 1, 19)};
        if (board.at(c) != Cell::Empty)
            continue;
        try {
            board.place(color, c);
        } catch (const DataError&) {
            continue;
        }
        game.moves.push_back(MoveAction{color, false, c});
        color = opposite(color);
        ++placed;
    }
    return game;
}

// Synthetic event streams for graph-level tests (no board semantics needed).
inline std::vector<GameEvents> random_event_corpus(std::mt19937_64& rng, int n_games,
                                                   int max_events, int n_classes) {
    std::vector<GameEvents> corpus;
    for (int g = 0; g < n_games; ++g) {
        GameEvents game;
        game.game_id = "synthetic#" + std::to_string(g);
        int n = rand_int(rng, 0, max_events);
        for (int i = 0; i < n; ++i) {
            MoveEvent e;
            e.index = i;
            e.seq = i;
            e.mover = i % 2 ? Color::White : Color::Black;
            e.at = Coord{rand_int(rng, 1, 19), rand_int(rng, 1, 19)};
            e.class_id = static_cast<uint16_t>(rand_int(rng, 0, n_classes - 1));
            game.events.push_back(e);
        }
        corpus.push_back(std::move(game));
    }
    return corpus;
}

}  // namespace gonet::test
