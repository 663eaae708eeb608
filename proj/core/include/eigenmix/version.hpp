#pragma once

namespace eigenmix {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace eigenmix
