#include "gonet/sgf.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace gonet {

namespace {

struct SgfProperty {
    std::string ident;
    std::vector<std::string> values;  // raw, escapes still in place
    size_t offset = 0;                // byte offset of the ident
};

struct SgfNode {
    std::vector<SgfProperty> props;
};

// Recursive-descent reader over the raw bytes. Values keep their escape
// sequences; unescaping happens only where text semantics apply (metadata).
class Reader {
public:
    explicit Reader(const std::string& text) : text_(text) {}

    std::vector<std::vector<SgfNode>> read_collection() {
        std::vector<std::vector<SgfNode>> games;
        skip_ws();
        while (!eof()) {
            if (peek() != '(')
                throw ParseError("expected '(' to open a game tree", pos_);
            std::vector<SgfNode> main_line;
            read_gametree(main_line);
            games.push_back(std::move(main_line));
            skip_ws();
        }
        if (games.empty())
            throw ParseError("no game tree found", 0);
        return games;
    }

private:
    // Appends the tree's main line to `out`: own sequence, then the first
    // child subtree; later siblings are parsed and dropped.
    void read_gametree(std::vector<SgfNode>& out) {
        expect('(');
        skip_ws();
        if (peek() != ';')
            throw ParseError("expected ';' to start a node", pos_);
        while (!eof() && peek() == ';') {
            out.push_back(read_node());
            skip_ws();
        }
        bool first_child = true;
        while (!eof() && peek() == '(') {
            if (first_child) {
                read_gametree(out);
                first_child = false;
            } else {
                std::vector<SgfNode> dropped;
                read_gametree(dropped);
            }
            skip_ws();
        }
        expect(')');
    }

    SgfNode read_node() {
        expect(';');
        SgfNode node;
        skip_ws();
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
            SgfProperty prop;
            prop.offset = pos_;
            while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
                // FF3 long idents ("AddBlack") carry lowercase letters that
                // are dropped from the canonical name.
                char c = take();
                if (std::isupper(static_cast<unsigned char>(c)))
                    prop.ident.push_back(c);
            }
            skip_ws();
            if (eof() || peek() != '[')
                throw ParseError("property '" + prop.ident + "' has no value", pos_);
            while (!eof() && peek() == '[') {
                prop.values.push_back(read_value());
                skip_ws();
            }
            node.props.push_back(std::move(prop));
            skip_ws();
        }
        return node;
    }

    std::string read_value() {
        expect('[');
        std::string raw;
        while (true) {
            if (eof())
                throw ParseError("unterminated property value", pos_);
            char c = take();
            if (c == '\\') {
                if (eof())
                    throw ParseError("dangling escape at end of input", pos_);
                raw.push_back(c);
                raw.push_back(take());
            } else if (c == ']') {
                return raw;
            } else {
                raw.push_back(c);
            }
        }
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }

    void expect(char c) {
        if (eof() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
};

std::string unescape(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == '\\' && i + 1 < raw.size()) {
            ++i;
            if (raw[i] != '\n')  // backslash-newline is a soft line break
                out.push_back(raw[i]);
        } else {
            out.push_back(raw[i]);
        }
    }
    return out;
}

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == ']' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

Coord decode_coord(const std::string& value, const std::string& game_id) {
    if (value.size() != 2)
        throw DataError("invalid coordinate '" + value + "' in game " + game_id);
    int h = value[0] - 'a' + 1;
    int v = value[1] - 'a' + 1;
    if (h < 1 || h > 19 || v < 1 || v > 19)
        throw DataError("coordinate '" + value + "' outside the 19x19 board in game " + game_id);
    return Coord{h, v};
}

bool is_pass_value(const std::string& value) {
    return value.empty() || value == "tt";
}

void append_setup(std::vector<Coord>& setup, const std::string& raw, const std::string& game_id) {
    auto colon = raw.find(':');
    if (colon == std::string::npos) {
        setup.push_back(decode_coord(raw, game_id));
        return;
    }
    // FF4 compressed point list "ul:lr"
    Coord ul = decode_coord(raw.substr(0, colon), game_id);
    Coord lr = decode_coord(raw.substr(colon + 1), game_id);
    if (ul.h > lr.h || ul.v > lr.v)
        throw DataError("degenerate point rectangle '" + raw + "' in game " + game_id);
    for (int v = ul.v; v <= lr.v; ++v)
        for (int h = ul.h; h <= lr.h; ++h)
            setup.push_back(Coord{h, v});
}

GameRecord to_record(const std::vector<SgfNode>& nodes, std::string id) {
    GameRecord game;
    game.id = std::move(id);
    for (const SgfNode& node : nodes) {
        for (const SgfProperty& prop : node.props) {
            if (prop.ident == "B" || prop.ident == "W") {
                Color color = prop.ident == "B" ? Color::Black : Color::White;
                const std::string& raw = prop.values.front();
                if (is_pass_value(raw))
                    game.moves.push_back(MoveAction{color, true, {}});
                else
                    game.moves.push_back(MoveAction{color, false, decode_coord(raw, game.id)});
            } else if (prop.ident == "AB" || prop.ident == "AW") {
                auto& setup = prop.ident == "AB" ? game.setup_black : game.setup_white;
                for (const std::string& raw : prop.values)
                    append_setup(setup, raw, game.id);
            } else if (prop.ident == "SZ") {
                std::string value = unescape(prop.values.front());
                // rectangular "w:h" allowed by FF4; both extents must be 19
                for (const std::string& part : {value.substr(0, value.find(':')),
                                                value.substr(value.find(':') == std::string::npos
                                                                 ? 0
                                                                 : value.find(':') + 1)}) {
                    int size = 0;
                    try {
                        size = std::stoi(part);
                    } catch (const std::exception&) {
                        throw DataError("unparseable SZ '" + value + "' in game " + game.id);
                    }
                    if (size != 19)
                        throw DataError("unsupported board size " + std::to_string(size) +
                                        " in game " + game.id + " (only 19x19 is supported)");
                }
                game.board_size = 19;
            } else {
                std::string value;
                for (size_t i = 0; i < prop.values.size(); ++i) {
                    if (i) value += ", ";
                    value += unescape(prop.values[i]);
                }
                auto [it, inserted] = game.metadata.emplace(prop.ident, value);
                if (!inserted) {
                    it->second += ", ";
                    it->second += value;
                }
            }
        }
    }
    std::set<Coord> seen;
    for (const auto* setup : {&game.setup_black, &game.setup_white})
        for (Coord c : *setup)
            if (!seen.insert(c).second)
                throw DataError("duplicate setup stone in game " + game.id);
    return game;
}

}  // namespace

std::vector<GameRecord> parse_sgf(const std::string& text, const std::string& source_name) {
    Reader reader(text);
    std::vector<std::vector<SgfNode>> trees = reader.read_collection();
    std::vector<GameRecord> games;
    games.reserve(trees.size());
    for (size_t k = 0; k < trees.size(); ++k)
        games.push_back(to_record(trees[k], source_name + "#" + std::to_string(k)));
    return games;
}

std::string write_sgf(const GameRecord& game) {
    std::ostringstream out;
    out << "(;SZ[" << game.board_size << "]";
    for (const auto& [key, value] : game.metadata)
        out << key << "[" << escape(value) << "]";
    auto coord_str = [](Coord c) {
        return std::string{static_cast<char>('a' + c.h - 1), static_cast<char>('a' + c.v - 1)};
    };
    for (const auto& [ident, setup] :
         {std::pair{"AB", &game.setup_black}, std::pair{"AW", &game.setup_white}}) {
        if (!setup->empty()) {
            out << ident;
            for (Coord c : *setup)
                out << "[" << coord_str(c) << "]";
        }
    }
    for (const MoveAction& move : game.moves) {
        out << ";" << color_char(move.color) << "[";
        if (!move.is_pass)
            out << coord_str(move.at);
        out << "]";
    }
    out << ")";
    return out.str();
}

uint64_t Corpus::digest() const {
    uint64_t hash = 0xcbf29ce484222325ull;
    auto feed = [&hash](const std::string& bytes) {
        for (unsigned char b : bytes) {
            hash ^= b;
            hash *= 0x100000001b3ull;
        }
    };
    for (const GameRecord& game : games)
        feed(write_sgf(game));
    return hash;
}

std::string digest_hex(uint64_t digest) {
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[digest & 0xf];
        digest >>= 4;
    }
    return out;
}

Corpus load_corpus(const std::vector<std::filesystem::path>& paths, const LoadOptions& opts) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const fs::path& path : paths) {
        if (fs::is_directory(path)) {
            for (const auto& entry : fs::recursive_directory_iterator(path)) {
                if (!entry.is_regular_file())
                    continue;
                std::string ext = entry.path().extension().string();
                std::transform(ext.begin(), ext.end(), ext.begin(),
                               [](unsigned char c) { return std::tolower(c); });
                if (ext == ".sgf")
                    files.push_back(entry.path());
            }
        } else {
            files.push_back(path);
        }
    }
    std::sort(files.begin(), files.end());
    files.erase(std::unique(files.begin(), files.end()), files.end());

    Corpus corpus;
    for (const fs::path& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            std::string msg = "cannot read " + file.string();
            if (opts.strict)
                throw DataError(msg);
            corpus.warnings.push_back(msg);
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            std::vector<GameRecord> games = parse_sgf(buf.str(), file.filename().string());
            corpus.sources.push_back({file.string(), games.size()});
            for (GameRecord& game : games)
                corpus.games.push_back(std::move(game));
        } catch (const Error& err) {
            std::string msg = file.string() + ": " + err.what();
            if (opts.strict)
                throw DataError(msg);
            corpus.warnings.push_back(msg);
        }
    }
    return corpus;
}

}  // namespace gonet
