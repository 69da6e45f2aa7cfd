#pragma once

namespace gonet {
inline constexpr const char* kVersion = "0.1.0";
}
