#pragma once

namespace cdd {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cdd
