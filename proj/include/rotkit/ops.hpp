// Rotation algebra: composition, the fused yaw operator, pure z-rotation
// application and inverses, in every representation.
//
// Composition and the operations without a closed form convert to the
// quaternion hub, operate there, and convert back.
#pragma once

#include "rotkit/convert.hpp"
#include "rotkit/types.hpp"

namespace rotkit {

// Result of the fused yaw operator. singular is set iff the source rotation
// is at the fused yaw singularity (w^2 + z^2 <= 1e-24), in which case yaw is
// the canonical 0.
struct YawResult {
  double yaw = 0.0;
  bool singular = false;
};

// Hamilton product; corresponds to matrix multiplication.
Quaternion compose(const Quaternion& a, const Quaternion& b);
RotationMatrix compose(const RotationMatrix& a, const RotationMatrix& b);
EulerZyx compose(const EulerZyx& a, const EulerZyx& b);
EulerZxy compose(const EulerZxy& a, const EulerZxy& b);
TiltAngles compose(const TiltAngles& a, const TiltAngles& b);
FusedAngles compose(const FusedAngles& a, const FusedAngles& b);

// Fused yaw of a rotation in any representation.
YawResult fused_yaw(const Quaternion& q);
YawResult fused_yaw(const RotationMatrix& r);
YawResult fused_yaw(const EulerZyx& e);
YawResult fused_yaw(const EulerZxy& e);
YawResult fused_yaw(const TiltAngles& t);
YawResult fused_yaw(const FusedAngles& f);

// Pre-multiplication by a pure z-rotation (global frame z-rotation). Adds
// yaw_z to the fused yaw and leaves the tilt rotation component unchanged.
Quaternion apply_z_pre(const Quaternion& q, double yaw_z);
RotationMatrix apply_z_pre(const RotationMatrix& r, double yaw_z);
EulerZyx apply_z_pre(const EulerZyx& e, double yaw_z);
EulerZxy apply_z_pre(const EulerZxy& e, double yaw_z);
TiltAngles apply_z_pre(const TiltAngles& t, double yaw_z);
FusedAngles apply_z_pre(const FusedAngles& f, double yaw_z);

// Post-multiplication by a pure z-rotation (local frame z-rotation). Also
// adds yaw_z to the fused yaw; the tilt axis angle shifts by -yaw_z.
Quaternion apply_z_post(const Quaternion& q, double yaw_z);
RotationMatrix apply_z_post(const RotationMatrix& r, double yaw_z);
EulerZyx apply_z_post(const EulerZyx& e, double yaw_z);
EulerZxy apply_z_post(const EulerZxy& e, double yaw_z);
TiltAngles apply_z_post(const TiltAngles& t, double yaw_z);
FusedAngles apply_z_post(const FusedAngles& f, double yaw_z);

// Rotation inverse in the same representation. Quaternions conjugate,
// matrices transpose, Euler/tilt/fused use their closed forms (the fused
// yaw negates; the hemisphere is preserved).
Quaternion inverse(const Quaternion& q);
RotationMatrix inverse(const RotationMatrix& r);
EulerZyx inverse(const EulerZyx& e);
EulerZxy inverse(const EulerZxy& e);
TiltAngles inverse(const TiltAngles& t);
FusedAngles inverse(const FusedAngles& f);

}  // namespace rotkit
