#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wrinklepath {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle to [0, 2*pi). Throws std::domain_error on non-finite input.
inline double normalize_angle(double a) {
    if (!std::isfinite(a)) throw std::domain_error("normalize_angle: non-finite angle");
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // the += above can round up to exactly 2*pi
    return r;
}

/// Wraps an angle to (-pi, pi].
inline double wrap_signed(double a) {
    double r = normalize_angle(a);
    if (r > std::numbers::pi) r -= kTwoPi;
    return r;
}

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace wrinklepath
