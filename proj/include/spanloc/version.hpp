#pragma once

namespace spanloc {
inline constexpr const char* kVersion = "0.1.0";
}
