#pragma once

namespace ordram {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ordram
