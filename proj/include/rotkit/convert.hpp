// Conversions between all six rotation representations.
//
// Pairs with a closed form are implemented directly; every other pair is
// routed through the quaternion hub. Parameter-space inputs are domain
// checked and throw std::invalid_argument when invalid; matrix inputs are
// assumed orthonormal (use validate() upstream when in doubt).
//
// Extractions that can hit the fused yaw singularity (tilt angle alpha = pi,
// i.e. quaternion w = z = 0) stay total: they return yaw = 0 and report the
// singularity through the optional out-flag.
#pragma once

#include "rotkit/types.hpp"

namespace rotkit {

// --- quaternion <-> rotation matrix -----------------------------------------

RotationMatrix quat_to_rotmat(const Quaternion& q);
// Sign canonicalisation: w >= 0, a w == 0 tie broken by the first non-zero
// of (x, y, z) being positive.
Quaternion rotmat_to_quat(const RotationMatrix& r);

// --- ZYX Euler angles --------------------------------------------------------

// R = Rz(yaw) Ry(pitch) Rx(roll).
RotationMatrix euler_zyx_to_rotmat(const EulerZyx& e);
// At gimbal lock (|R31| >= 1 - 1e-12) returns the canonical representative
// of the equivalence class with roll = 0.
EulerZyx rotmat_to_euler_zyx(const RotationMatrix& r);
Quaternion euler_zyx_to_quat(const EulerZyx& e);
EulerZyx quat_to_euler_zyx(const Quaternion& q);

// --- ZXY Euler angles --------------------------------------------------------

Quaternion euler_zxy_to_quat(const EulerZxy& e);
// At gimbal lock (|sin roll| >= 1 - 1e-12) returns the canonical
// representative with pitch = 0.
EulerZxy quat_to_euler_zxy(const Quaternion& q);
RotationMatrix euler_zxy_to_rotmat(const EulerZxy& e);
EulerZxy rotmat_to_euler_zxy(const RotationMatrix& r);

// --- tilt angles -------------------------------------------------------------

RotationMatrix tilt_to_rotmat(const TiltAngles& t);
TiltAngles rotmat_to_tilt(const RotationMatrix& r, bool* singular = nullptr);
Quaternion tilt_to_quat(const TiltAngles& t);
TiltAngles quat_to_tilt(const Quaternion& q, bool* singular = nullptr);

// --- fused angles ------------------------------------------------------------

FusedAngles quat_to_fused(const Quaternion& q, bool* singular = nullptr);
Quaternion fused_to_quat(const FusedAngles& f);
FusedAngles rotmat_to_fused(const RotationMatrix& r, bool* singular = nullptr);
RotationMatrix fused_to_rotmat(const FusedAngles& f);

// Quadrature split of the tilt rotation: sin(alpha) = hypot(sin pitch,
// sin roll), axis_angle = atan2(sin pitch, sin roll). The tilt axis angle of
// an identity tilt (alpha <= 1e-12) is fixed to 0.
TiltAngles fused_to_tilt(const FusedAngles& f);
FusedAngles tilt_to_fused(const TiltAngles& t);

// --- remaining pairs, routed through the quaternion hub ----------------------

EulerZxy euler_zyx_to_euler_zxy(const EulerZyx& e);
EulerZyx euler_zxy_to_euler_zyx(const EulerZxy& e);
TiltAngles euler_zyx_to_tilt(const EulerZyx& e, bool* singular = nullptr);
EulerZyx tilt_to_euler_zyx(const TiltAngles& t);
FusedAngles euler_zyx_to_fused(const EulerZyx& e, bool* singular = nullptr);
EulerZyx fused_to_euler_zyx(const FusedAngles& f);
TiltAngles euler_zxy_to_tilt(const EulerZxy& e, bool* singular = nullptr);
EulerZxy tilt_to_euler_zxy(const TiltAngles& t);
FusedAngles euler_zxy_to_fused(const EulerZxy& e, bool* singular = nullptr);
EulerZxy fused_to_euler_zxy(const FusedAngles& f);

// --- cross-representation relations ------------------------------------------

// The closed-form relations between ZYX Euler angles and the tilt/fused
// parameters of the same rotation, evaluated without going through any other
// representation. euler_roll_check = atan2(sin fused_roll, cos tilt_angle)
// reconstructs the Euler roll and is exposed for consistency testing.
struct EulerFusedRelation {
  double euler_roll_check = 0.0;
  double tilt_axis_angle = 0.0;  // gamma
  double tilt_angle = 0.0;       // alpha
  double fused_roll = 0.0;       // phi
  int hemi = 1;
  bool gimbal = false;  // |pitch| at pi/2: tilt_axis_angle is ill-conditioned
};
EulerFusedRelation euler_fused_relations(const EulerZyx& e);

// Euler yaw of the rotation described by tilt angles. Flags when the result
// sits at (or within 1e-9 of) gimbal lock.
double euler_yaw_from_tilt(const TiltAngles& t, bool* gimbal = nullptr);

// Fused yaw of the rotation described by ZYX Euler angles. Flags when the
// rotation is at (or within 1e-12 of) the fused yaw singularity.
double fused_yaw_from_euler(const EulerZyx& e, bool* singular = nullptr);

}  // namespace rotkit
