// Angle wrapping and safe inverse-trig helpers shared by all rotation code.
#pragma once

#include <numbers>

namespace rotkit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Wraps an angle in radians to (-pi, pi]. wrap(-pi) == pi by convention.
// Throws std::invalid_argument for non-finite input.
double wrap(double angle);

// Wrapped absolute difference between two angles, in [0, pi].
double angle_dist(double a, double b);

// asin/acos with the argument clamped to [-1, 1]. Arguments that exceed the
// unit interval by more than 1e-9 indicate a bug upstream and throw
// std::logic_error instead of being masked.
double safe_asin(double v);
double safe_acos(double v);

}  // namespace rotkit
