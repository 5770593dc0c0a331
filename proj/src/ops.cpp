#include "rotkit/ops.hpp"

#include <cmath>

#include "rotkit/validate.hpp"

namespace rotkit {

namespace {

void require_valid(const ValidationReport& rep, const char* op) {
  if (!rep.ok()) throw std::invalid_argument(std::string(op) + ": " + rep.summary());
}

}  // namespace

// --- composition --------------------------------------------------------------

Quaternion compose(const Quaternion& a, const Quaternion& b) {
  require_valid(validate(a), "compose");
  require_valid(validate(b), "compose");
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
          a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x};
}

RotationMatrix compose(const RotationMatrix& a, const RotationMatrix& b) { return a * b; }

EulerZyx compose(const EulerZyx& a, const EulerZyx& b) {
  return quat_to_euler_zyx(compose(euler_zyx_to_quat(a), euler_zyx_to_quat(b)));
}
EulerZxy compose(const EulerZxy& a, const EulerZxy& b) {
  return quat_to_euler_zxy(compose(euler_zxy_to_quat(a), euler_zxy_to_quat(b)));
}
TiltAngles compose(const TiltAngles& a, const TiltAngles& b) {
  return quat_to_tilt(compose(tilt_to_quat(a), tilt_to_quat(b)));
}
FusedAngles compose(const FusedAngles& a, const FusedAngles& b) {
  return quat_to_fused(compose(fused_to_quat(a), fused_to_quat(b)));
}

// --- fused yaw operator -------------------------------------------------------

YawResult fused_yaw(const Quaternion& q) {
  YawResult out;
  out.yaw = quat_to_fused(q, &out.singular).yaw;
  return out;
}

YawResult fused_yaw(const RotationMatrix& r) {
  YawResult out;
  out.yaw = rotmat_to_fused(r, &out.singular).yaw;
  return out;
}

YawResult fused_yaw(const EulerZyx& e) { return fused_yaw(euler_zyx_to_quat(e)); }
YawResult fused_yaw(const EulerZxy& e) { return fused_yaw(euler_zxy_to_quat(e)); }

YawResult fused_yaw(const TiltAngles& t) {
  require_valid(validate(t), "fused_yaw");
  // Singular iff cos(angle/2) <= 1e-12, matching the quaternion condition
  // w^2 + z^2 = cos^2(angle/2) <= 1e-24.
  if (std::cos(0.5 * t.angle) <= 1e-12) return {0.0, true};
  return {wrap(t.yaw), false};
}

YawResult fused_yaw(const FusedAngles& f) {
  require_valid(validate(f), "fused_yaw");
  if (f.hemi < 0 && std::hypot(std::sin(f.pitch), std::sin(f.roll)) <= 2e-12) {
    return {0.0, true};
  }
  return {wrap(f.yaw), false};
}

// --- pure z-rotation application ----------------------------------------------

Quaternion apply_z_pre(const Quaternion& q, double yaw_z) { return compose(quat_z(yaw_z), q); }
RotationMatrix apply_z_pre(const RotationMatrix& r, double yaw_z) { return rotmat_z(yaw_z) * r; }

EulerZyx apply_z_pre(const EulerZyx& e, double yaw_z) {
  require_valid(validate(e), "apply_z_pre");
  return {wrap(e.yaw + yaw_z), e.pitch, e.roll};
}
EulerZxy apply_z_pre(const EulerZxy& e, double yaw_z) {
  require_valid(validate(e), "apply_z_pre");
  return {wrap(e.yaw + yaw_z), e.roll, e.pitch};
}
TiltAngles apply_z_pre(const TiltAngles& t, double yaw_z) {
  require_valid(validate(t), "apply_z_pre");
  return {wrap(t.yaw + yaw_z), t.axis_angle, t.angle};
}
FusedAngles apply_z_pre(const FusedAngles& f, double yaw_z) {
  require_valid(validate(f), "apply_z_pre");
  return {wrap(f.yaw + yaw_z), f.pitch, f.roll, f.hemi};
}

Quaternion apply_z_post(const Quaternion& q, double yaw_z) { return compose(q, quat_z(yaw_z)); }
RotationMatrix apply_z_post(const RotationMatrix& r, double yaw_z) { return r * rotmat_z(yaw_z); }

EulerZyx apply_z_post(const EulerZyx& e, double yaw_z) {
  return quat_to_euler_zyx(apply_z_post(euler_zyx_to_quat(e), yaw_z));
}
EulerZxy apply_z_post(const EulerZxy& e, double yaw_z) {
  return quat_to_euler_zxy(apply_z_post(euler_zxy_to_quat(e), yaw_z));
}
TiltAngles apply_z_post(const TiltAngles& t, double yaw_z) {
  require_valid(validate(t), "apply_z_post");
  // A local z-rotation adds to the yaw and swings the tilt axis back by the
  // same amount: T(yaw, g, a) o Tz(y) = T(yaw + y, g - y, a).
  return {wrap(t.yaw + yaw_z), wrap(t.axis_angle - yaw_z), t.angle};
}
FusedAngles apply_z_post(const FusedAngles& f, double yaw_z) {
  return tilt_to_fused(apply_z_post(fused_to_tilt(f), yaw_z));
}

// --- inverses -------------------------------------------------------------------

Quaternion inverse(const Quaternion& q) {
  require_valid(validate(q), "inverse");
  return q.conjugate();
}

RotationMatrix inverse(const RotationMatrix& r) { return r.transposed(); }

EulerZyx inverse(const EulerZyx& e) {
  require_valid(validate(e), "inverse");
  const double cy = std::cos(e.yaw), sy = std::sin(e.yaw);
  const double cp = std::cos(e.pitch), sp = std::sin(e.pitch);
  const double cr = std::cos(e.roll), sr = std::sin(e.roll);
  return {wrap(std::atan2(cy * sp * sr - sy * cr, cy * cp)),
          -safe_asin(cy * sp * cr + sy * sr),
          wrap(std::atan2(sy * sp * cr - cy * sr, cp * cr))};
}

EulerZxy inverse(const EulerZxy& e) { return quat_to_euler_zxy(inverse(euler_zxy_to_quat(e))); }

TiltAngles inverse(const TiltAngles& t) {
  require_valid(validate(t), "inverse");
  return {wrap(-t.yaw), wrap(t.yaw + t.axis_angle - kPi), t.angle};
}

FusedAngles inverse(const FusedAngles& f) {
  require_valid(validate(f), "inverse");
  const double cy = std::cos(f.yaw), sy = std::sin(f.yaw);
  const double sp = std::sin(f.pitch), sr = std::sin(f.roll);
  return {wrap(-f.yaw), -safe_asin(cy * sp + sy * sr), safe_asin(sy * sp - cy * sr), f.hemi};
}

}  // namespace rotkit
