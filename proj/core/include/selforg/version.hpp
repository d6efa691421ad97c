#pragma once

namespace selforg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace selforg
