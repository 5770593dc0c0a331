// Value types for the six rotation representations handled by this library:
// quaternion, rotation matrix, intrinsic ZYX and ZXY Euler angles, tilt
// angles and fused angles.
//
// Conventions:
//  - all angles are radians; wrapped angles live in (-pi, pi]
//  - quaternions are (w, x, y, z) with q and -q denoting the same rotation
//  - rotation matrices are row-major, right-handed, det +1
//  - all types are immutable values and all operations on them are pure
//    functions, so unrestricted concurrent use is safe
#pragma once

#include <array>
#include <stdexcept>

#include "rotkit/angle.hpp"

namespace rotkit {

// Thrown when an operation requires a rotation away from the fused yaw
// singularity (tilt angle alpha = pi) but is handed one at it.
struct SingularError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& v);
Vec3 normalized(const Vec3& v);  // throws std::invalid_argument on near-zero input

// Unit quaternion (w, x, y, z). The constructor renormalises inputs whose
// norm deviates from 1 by at most 1e-6; anything worse is kept as-is and
// reported by validate() so that grossly bad data is not silently fixed.
struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_);

  double norm() const;
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
};

// 3x3 rotation matrix, row-major storage. operator()(row, col) is 0-based;
// the documentation of the extraction formulas uses the 1-based R_ij names.
struct RotationMatrix {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  RotationMatrix() = default;
  RotationMatrix(double r11, double r12, double r13,
                 double r21, double r22, double r23,
                 double r31, double r32, double r33)
      : m{r11, r12, r13, r21, r22, r23, r31, r32, r33} {}

  double operator()(int row, int col) const { return m[3 * row + col]; }
  double& operator()(int row, int col) { return m[3 * row + col]; }

  Vec3 row(int i) const { return {m[3 * i], m[3 * i + 1], m[3 * i + 2]}; }
  Vec3 col(int j) const { return {m[j], m[3 + j], m[6 + j]}; }

  RotationMatrix transposed() const;
};

RotationMatrix operator*(const RotationMatrix& a, const RotationMatrix& b);
Vec3 operator*(const RotationMatrix& a, const Vec3& v);

// Intrinsic ZYX Euler angles: yaw about z, then pitch about the new y, then
// roll about the newest x. Domain (-pi,pi] x [-pi/2,pi/2] x (-pi,pi].
struct EulerZyx {
  double yaw = 0.0, pitch = 0.0, roll = 0.0;

  EulerZyx() = default;
  EulerZyx(double yaw_, double pitch_, double roll_) : yaw(yaw_), pitch(pitch_), roll(roll_) {}
};

// Intrinsic ZXY Euler angles: yaw about z, then roll about the new x, then
// pitch about the newest y. Domain (-pi,pi] x [-pi/2,pi/2] x (-pi,pi].
// Field order matches the parameter tuple (yaw, roll, pitch).
struct EulerZxy {
  double yaw = 0.0, roll = 0.0, pitch = 0.0;

  EulerZxy() = default;
  EulerZxy(double yaw_, double roll_, double pitch_) : yaw(yaw_), roll(roll_), pitch(pitch_) {}
};

// Tilt angles (yaw, axis_angle, angle): a z-rotation by the fused yaw,
// followed by a rotation by `angle` (alpha, in [0, pi]) about the axis in
// the xy plane at heading `axis_angle` (gamma). angle == pi is the fused
// yaw singularity.
struct TiltAngles {
  double yaw = 0.0;         // fused yaw, (-pi, pi]
  double axis_angle = 0.0;  // tilt axis angle, (-pi, pi]
  double angle = 0.0;       // tilt angle, [0, pi]

  TiltAngles() = default;
  TiltAngles(double yaw_, double axis_angle_, double angle_)
      : yaw(yaw_), axis_angle(axis_angle_), angle(angle_) {}
};

// Fused angles (yaw, pitch, roll, hemi). Pitch and roll are the signed
// angles between the global z-axis and the body yz / xz planes; their sines
// are quadrature components of sin(alpha). Valid values satisfy the sine sum
// criterion sin^2(pitch) + sin^2(roll) <= 1, equivalently
// |pitch| + |roll| <= pi/2. hemi = sign(cos alpha), with the alpha = pi/2
// equator assigned to +1.
struct FusedAngles {
  double yaw = 0.0;    // (-pi, pi]
  double pitch = 0.0;  // [-pi/2, pi/2]
  double roll = 0.0;   // [-pi/2, pi/2]
  int hemi = 1;        // {-1, +1}

  FusedAngles() = default;
  FusedAngles(double yaw_, double pitch_, double roll_, int hemi_)
      : yaw(yaw_), pitch(pitch_), roll(roll_), hemi(hemi_) {}
};

// Elemental rotations about the coordinate axes.
RotationMatrix rotmat_x(double angle);
RotationMatrix rotmat_y(double angle);
RotationMatrix rotmat_z(double angle);
Quaternion quat_x(double angle);
Quaternion quat_y(double angle);
Quaternion quat_z(double angle);

}  // namespace rotkit
