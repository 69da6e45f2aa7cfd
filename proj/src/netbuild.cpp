#include "gonet/netbuild.hpp"

#include <fstream>
#include <random>
#include <thread>

#include <json.hpp>

#include "gonet/board.hpp"
#include "gonet/version.hpp"

namespace gonet {

using ordered_json = nlohmann::ordered_json;

GameEvents extract_events(const GameRecord& game, const ClassTable& table) {
    if (game.board_size != 19)
        throw DataError("game " + game.id + " is not 19x19");

    Board board;
    for (Coord c : game.setup_black)
        board.set(c, Cell::Black);
    for (Coord c : game.setup_white)
        board.set(c, Cell::White);
    for (const auto* setup : {&game.setup_black, &game.setup_white})
        for (Coord c : *setup)
            if (board.chain_and_liberties(c).liberties == 0)
                throw DataError("game " + game.id + ": setup leaves a chain without liberties");

    GameEvents out;
    out.game_id = game.id;
    out.events.reserve(game.moves.size());
    int32_t index = 0;
    for (size_t seq = 0; seq < game.moves.size(); ++seq) {
        const MoveAction& move = game.moves[seq];
        if (move.is_pass)
            continue;
        MoveEvent event;
        event.index = index++;
        event.seq = static_cast<int32_t>(seq);
        event.mover = move.color;
        event.at = move.at;
        try {
            if (board.at(move.at) != Cell::Empty)
                throw DataError("move onto occupied intersection");
            event.class_id = table.class_of(board.neighborhood(move.at), move.color);
            board.place(move.color, move.at);
        } catch (const Error& err) {
            throw DataError("game " + game.id + ", move " + std::to_string(seq + 1) + ": " +
                            err.what());
        }
        out.events.push_back(event);
    }
    return out;
}

std::vector<GameEvents> extract_all(std::span<const GameRecord> games, const ClassTable& table,
                                    int n_threads) {
    std::vector<GameEvents> out(games.size());
    if (n_threads <= 1 || games.size() < 2) {
        for (size_t i = 0; i < games.size(); ++i)
            out[i] = extract_events(games[i], table);
        return out;
    }
    size_t n_workers = std::min<size_t>(n_threads, games.size());
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(n_workers);
    for (size_t w = 0; w < n_workers; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (size_t i = w; i < games.size(); i += n_workers)
                    out[i] = extract_events(games[i], table);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers)
        t.join();
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);
    return out;
}

int64_t GoNetwork::total_moves() const {
    int64_t total = 0;
    for (int64_t c : vertex_counts)
        total += c;
    return total;
}

int64_t GoNetwork::total_edge_weight() const {
    int64_t total = 0;
    for (const auto& [edge, w] : edges)
        total += w;
    return total;
}

GoNetwork build_network(std::span<const GameEvents> games, NetworkConfig config, int n_vertices) {
    if (config.d < 1)
        throw DataError("link radius d must be >= 1");
    GoNetwork net;
    net.n_vertices = n_vertices;
    net.config = config;
    net.n_games = static_cast<int64_t>(games.size());
    net.vertex_counts.assign(n_vertices, 0);
    for (const GameEvents& game : games) {
        for (const MoveEvent& event : game.events)
            net.vertex_counts.at(event.class_id) += 1;
        for (size_t i = 1; i < game.events.size(); ++i) {
            const MoveEvent& a = game.events[i - 1];
            const MoveEvent& b = game.events[i];
            if (linked(a, b, config.d))
                net.edges[{a.class_id, b.class_id}] += 1;
        }
    }
    return net;
}

namespace {

// Unbiased bounded draw; implementation-defined std distributions would break
// cross-platform determinism of seeded runs.
uint64_t bounded_draw(std::mt19937_64& rng, uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        uint64_t r = rng();
        if (r >= threshold)
            return r % bound;
    }
}

}  // namespace

std::vector<GameEvents> shuffle_baseline(std::span<const GameEvents> games, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GameEvents> out;
    out.reserve(games.size());
    for (const GameEvents& game : games) {
        GameEvents shuffled = game;
        auto& ev = shuffled.events;
        for (size_t i = ev.size(); i > 1; --i)
            std::swap(ev[i - 1], ev[bounded_draw(rng, i)]);
        for (size_t i = 0; i < ev.size(); ++i) {
            ev[i].index = static_cast<int32_t>(i);
            ev[i].seq = static_cast<int32_t>(i);
        }
        out.push_back(std::move(shuffled));
    }
    return out;
}

GoNetwork merge_networks(std::span<const GoNetwork> nets) {
    if (nets.empty())
        return GoNetwork{};
    GoNetwork out = nets.front();
    for (size_t i = 1; i < nets.size(); ++i) {
        const GoNetwork& net = nets[i];
        if (net.config != out.config || net.n_vertices != out.n_vertices)
            throw DataError("merge_networks: mismatched network configuration");
        out.n_games += net.n_games;
        for (int v = 0; v < out.n_vertices; ++v)
            out.vertex_counts[v] += net.vertex_counts[v];
        for (const auto& [edge, w] : net.edges)
            out.edges[edge] += w;
    }
    return out;
}

GoNetwork transpose(const GoNetwork& net) {
    GoNetwork out = net;
    out.edges.clear();
    for (const auto& [edge, w] : net.edges)
        out.edges[{edge.second, edge.first}] = w;
    return out;
}

static ordered_json meta_json(const FileMeta& meta) {
    return ordered_json{{"tool", meta.tool},
                        {"version", meta.version.empty() ? kVersion : meta.version},
                        {"corpus_digest", meta.corpus_digest}};
}

void save_network(const std::filesystem::path& path, const GoNetwork& net, const FileMeta& meta) {
    ordered_json j;
    j["meta"] = meta_json(meta);
    j["config"] = {{"d", net.config.d}};
    j["n_games"] = net.n_games;
    j["n_vertices"] = net.n_vertices;
    j["vertex_counts"] = net.vertex_counts;
    ordered_json edges = ordered_json::array();
    for (const auto& [edge, w] : net.edges)
        edges.push_back({edge.first, edge.second, w});
    j["edges"] = std::move(edges);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write " + path.string());
    out << j.dump() << "\n";
}

GoNetwork load_network(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot read " + path.string());
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& err) {
        throw DataError(path.string() + ": " + err.what());
    }
    GoNetwork net;
    net.config.d = j.at("config").at("d").get<int>();
    net.n_games = j.at("n_games").get<int64_t>();
    net.n_vertices = j.value("n_vertices", 1107);
    net.vertex_counts = j.at("vertex_counts").get<std::vector<int64_t>>();
    if (static_cast<int>(net.vertex_counts.size()) != net.n_vertices)
        throw DataError(path.string() + ": vertex_counts size mismatch");
    for (const auto& e : j.at("edges")) {
        int from = e.at(0).get<int>();
        int to = e.at(1).get<int>();
        int64_t w = e.at(2).get<int64_t>();
        if (from < 0 || from >= net.n_vertices || to < 0 || to >= net.n_vertices || w < 1)
            throw DataError(path.string() + ": invalid edge entry");
        net.edges[{static_cast<uint16_t>(from), static_cast<uint16_t>(to)}] = w;
    }
    return net;
}

void save_events(const std::filesystem::path& path, std::span<const GameEvents> games,
                 const FileMeta& meta) {
    ordered_json j;
    j["meta"] = meta_json(meta);
    ordered_json out_games = ordered_json::array();
    for (const GameEvents& game : games) {
        ordered_json ev = ordered_json::array();
        for (const MoveEvent& e : game.events)
            ev.push_back({e.index, e.seq, e.mover == Color::Black ? 0 : 1, e.at.h, e.at.v,
                          e.class_id});
        out_games.push_back({{"id", game.game_id}, {"events", std::move(ev)}});
    }
    j["games"] = std::move(out_games);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write " + path.string());
    out << j.dump() << "\n";
}

std::vector<GameEvents> load_events(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot read " + path.string());
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& err) {
        throw DataError(path.string() + ": " + err.what());
    }
    std::vector<GameEvents> games;
    for (const auto& g : j.at("games")) {
        GameEvents game;
        game.game_id = g.at("id").get<std::string>();
        for (const auto& e : g.at("events")) {
            MoveEvent event;
            event.index = e.at(0).get<int32_t>();
            event.seq = e.at(1).get<int32_t>();
            event.mover = e.at(2).get<int>() == 0 ? Color::Black : Color::White;
            event.at = Coord{e.at(3).get<int>(), e.at(4).get<int>()};
            event.class_id = e.at(5).get<uint16_t>();
            game.events.push_back(event);
        }
        games.push_back(std::move(game));
    }
    return games;
}

}  // namespace gonet
