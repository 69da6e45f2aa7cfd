#pragma once

#include <string>
#include <vector>

namespace gonet::cli {

// Exit codes: 0 ok, 1 usage, 2 data error, 3 numerical failure.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace gonet::cli
