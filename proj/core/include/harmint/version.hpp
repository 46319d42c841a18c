#pragma once

namespace harmint {

inline constexpr const char* version = "0.1.0";

}  // namespace harmint
