// Shared comparison helpers for the rotkit test suites.
#pragma once

#include <algorithm>
#include <cmath>

#include "rotkit/types.hpp"

namespace rotkit::test {

// Angle of the relative rotation between two unit quaternions (sign free).
inline double geodesic(const Quaternion& a, const Quaternion& b) {
  const Quaternion r{a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z,
                     a.w * b.x - a.x * b.w - a.y * b.z + a.z * b.y,
                     a.w * b.y - a.y * b.w - a.z * b.x + a.x * b.z,
                     a.w * b.z - a.z * b.w - a.x * b.y + a.y * b.x};
  return 2.0 * std::atan2(std::sqrt(r.x * r.x + r.y * r.y + r.z * r.z), std::abs(r.w));
}

// Largest component difference after aligning signs (q and -q are equal).
inline double quat_dist(const Quaternion& a, const Quaternion& b) {
  const double dot = a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
  const double s = dot >= 0.0 ? 1.0 : -1.0;
  return std::max({std::abs(a.w - s * b.w), std::abs(a.x - s * b.x), std::abs(a.y - s * b.y),
                   std::abs(a.z - s * b.z)});
}

inline double mat_dist(const RotationMatrix& a, const RotationMatrix& b) {
  double d = 0.0;
  for (int i = 0; i < 9; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

inline double euler_zyx_dist(const EulerZyx& a, const EulerZyx& b) {
  return std::max({angle_dist(a.yaw, b.yaw), std::abs(a.pitch - b.pitch),
                   angle_dist(a.roll, b.roll)});
}

inline double euler_zxy_dist(const EulerZxy& a, const EulerZxy& b) {
  return std::max({angle_dist(a.yaw, b.yaw), std::abs(a.roll - b.roll),
                   angle_dist(a.pitch, b.pitch)});
}

inline double tilt_dist(const TiltAngles& a, const TiltAngles& b) {
  return std::max({angle_dist(a.yaw, b.yaw), angle_dist(a.axis_angle, b.axis_angle),
                   std::abs(a.angle - b.angle)});
}

// Angular fields only; compare hemispheres separately when they must match.
inline double fused_dist(const FusedAngles& a, const FusedAngles& b) {
  return std::max({angle_dist(a.yaw, b.yaw), std::abs(a.pitch - b.pitch),
                   std::abs(a.roll - b.roll)});
}

}  // namespace rotkit::test
