#pragma once

namespace wavessm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wavessm
