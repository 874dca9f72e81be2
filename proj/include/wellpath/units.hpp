#pragma once

#include <numbers>

namespace wellpath {

// Build-rate conversion constant in (deg/100 ft)·ft. Industry tables use the
// rounded 5730, which is the default; compile with
// -DWELLPATH_EXACT_BUILD_RATE_CONSTANT to use the unrounded 18000/pi.
inline constexpr double kBuildRateConstantExact = 18000.0 / std::numbers::pi;
#ifdef WELLPATH_EXACT_BUILD_RATE_CONSTANT
inline constexpr double kBuildRateConstant = kBuildRateConstantExact;
#else
inline constexpr double kBuildRateConstant = 5730.0;
#endif

inline constexpr double deg_to_rad(double deg) {
    return deg * std::numbers::pi / 180.0;
}

inline constexpr double rad_to_deg(double rad) {
    return rad * 180.0 / std::numbers::pi;
}

}  // namespace wellpath
