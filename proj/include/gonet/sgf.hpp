#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gonet/types.hpp"

namespace gonet {

// Parses an SGF collection (one or more game trees). Only the main line of
// each tree is kept: at every branch point the first variation wins.
// Recognized properties: B, W, AB, AW, SZ, HA. Everything else lands in
// metadata. B[]/W[] and B[tt]/W[tt] on 19x19 decode as a pass.
// Game ids are "<source_name>#<k>" with k the 0-based index in the collection.
std::vector<GameRecord> parse_sgf(const std::string& text, const std::string& source_name = "");

// Minimal main-line re-serialization (SZ, HA/metadata, AB/AW, moves).
// parse_sgf(write_sgf(g)) reproduces g up to the main-line subset.
std::string write_sgf(const GameRecord& game);

struct LoadOptions {
    bool strict = false;  // abort on a malformed file instead of skipping it
};

// Loads every path (an .sgf file, or a directory scanned recursively for
// *.sgf) in sorted-path order; games keep in-file order. A malformed file is
// a warning unless strict, in which case it aborts the load.
Corpus load_corpus(const std::vector<std::filesystem::path>& paths, const LoadOptions& opts = {});

}  // namespace gonet
