#pragma once

namespace flatspec {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "flatspec";

// Default seed for every randomized routine; never wall-clock.
inline constexpr unsigned long long kDefaultSeed = 20240901ull;

} // namespace flatspec
