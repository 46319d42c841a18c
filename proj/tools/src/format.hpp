#pragma once

#include <cstdio>
#include <string>

namespace harmint::cli {

/// 15 significant digits; the precision every human-readable surface
/// (stdout, CSV) rounds to.
inline std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.15g", value);
    return buffer;
}

/// Compact 3-digit form used for error estimates.
inline std::string format_brief(double value) {
    char buffer[24];
    std::snprintf(buffer, sizeof(buffer), "%.3g", value);
    return buffer;
}

}  // namespace harmint::cli
