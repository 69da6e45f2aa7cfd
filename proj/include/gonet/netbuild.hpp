#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gonet/plaquette.hpp"
#include "gonet/types.hpp"

namespace gonet {

// One played stone. `index` counts non-pass moves only (the spec's event
// index); `seq` counts every move including passes, so two events are
// consecutive for linking purposes iff their seq differ by exactly 1 --
// a pass in between breaks the chain.
struct MoveEvent {
    int32_t index = 0;
    int32_t seq = 0;
    Color mover = Color::Black;
    Coord at;
    uint16_t class_id = 0;

    bool operator==(const MoveEvent&) const = default;
};

struct GameEvents {
    std::string game_id;
    std::vector<MoveEvent> events;
};

inline bool linked(const MoveEvent& a, const MoveEvent& b, int d) {
    return b.seq == a.seq + 1 && chebyshev(a.at, b.at) <= d;
}

// Replays one game: setup stones shape the board but emit no events; every
// non-pass move is classified on the board as it stands *before* the stone
// lands, then placed (captures update the board for later events).
GameEvents extract_events(const GameRecord& game, const ClassTable& table);

// Replays a corpus, optionally across threads; output order = game order.
std::vector<GameEvents> extract_all(std::span<const GameRecord> games, const ClassTable& table,
                                    int n_threads = 1);

struct NetworkConfig {
    int d = 4;  // Chebyshev link radius

    bool operator==(const NetworkConfig&) const = default;
};

struct GoNetwork {
    int n_vertices = 0;
    NetworkConfig config;
    int64_t n_games = 0;
    std::vector<int64_t> vertex_counts;                       // per class id
    std::map<std::pair<uint16_t, uint16_t>, int64_t> edges;   // (from,to) -> weight

    int64_t total_moves() const;
    int64_t total_edge_weight() const;
};

GoNetwork build_network(std::span<const GameEvents> games, NetworkConfig config,
                        int n_vertices = 1107);

// Uniform within-game permutation of the derived events (class and coordinate
// travel together; nothing is re-replayed). index/seq are re-assigned 0..n-1
// in the new order. Deterministic for a given seed.
std::vector<GameEvents> shuffle_baseline(std::span<const GameEvents> games, uint64_t seed);

GoNetwork merge_networks(std::span<const GoNetwork> nets);

// Every edge reversed, weights kept.
GoNetwork transpose(const GoNetwork& net);

struct FileMeta {
    std::string tool = "gonet";
    std::string version;
    std::string corpus_digest;  // hex, empty when unknown
};

void save_network(const std::filesystem::path& path, const GoNetwork& net, const FileMeta& meta);
GoNetwork load_network(const std::filesystem::path& path);

void save_events(const std::filesystem::path& path, std::span<const GameEvents> games,
                 const FileMeta& meta);
std::vector<GameEvents> load_events(const std::filesystem::path& path);

}  // namespace gonet
