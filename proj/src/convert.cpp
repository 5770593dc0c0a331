#include "rotkit/convert.hpp"

#include <cmath>
#include <stdexcept>

#include "rotkit/validate.hpp"

namespace rotkit {

namespace {

constexpr double kGimbalTol = 1e-12;      // |sin pitch| within this of 1
constexpr double kSingularTol = 1e-24;    // on w^2 + z^2
constexpr double kIdentityTiltTol = 1e-12;  // tilt angle below which gamma := 0

void require_valid(const ValidationReport& rep, const char* op) {
  if (!rep.ok()) throw std::invalid_argument(std::string(op) + ": " + rep.summary());
}

// The extraction formulas must give the same result for q and -q, bit for
// bit. Flipping onto the w >= 0 sheet (ties on w == 0 broken towards z > 0)
// before extracting makes that exact.
Quaternion canonical_sheet(const Quaternion& q) {
  if (q.w < 0.0 || (q.w == 0.0 && q.z < 0.0)) return {-q.w, -q.x, -q.y, -q.z};
  return q;
}

}  // namespace

// --- quaternion <-> rotation matrix -----------------------------------------

RotationMatrix quat_to_rotmat(const Quaternion& q) {
  require_valid(validate(q), "quat_to_rotmat");
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  return {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
          2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
          2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
}

Quaternion rotmat_to_quat(const RotationMatrix& r) {
  // Shepperd's method: pivot on the largest of trace and the diagonal.
  const double t = r(0, 0) + r(1, 1) + r(2, 2);
  double w, x, y, z;
  if (t >= r(0, 0) && t >= r(1, 1) && t >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + t);
    w = 0.25 * s;
    x = (r(2, 1) - r(1, 2)) / s;
    y = (r(0, 2) - r(2, 0)) / s;
    z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2));
    w = (r(2, 1) - r(1, 2)) / s;
    x = 0.25 * s;
    y = (r(0, 1) + r(1, 0)) / s;
    z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 - r(0, 0) + r(1, 1) - r(2, 2));
    w = (r(0, 2) - r(2, 0)) / s;
    x = (r(0, 1) + r(1, 0)) / s;
    y = 0.25 * s;
    z = (r(1, 2) + r(2, 1)) / s;
  } else {
    const double s = 2.0 * std::sqrt(1.0 - r(0, 0) - r(1, 1) + r(2, 2));
    w = (r(1, 0) - r(0, 1)) / s;
    x = (r(0, 2) + r(2, 0)) / s;
    y = (r(1, 2) + r(2, 1)) / s;
    z = 0.25 * s;
  }
  // Canonical sign: w >= 0, a w == 0 tie broken by the first non-zero of
  // (x, y, z) being positive.
  if (w < 0.0 ||
      (w == 0.0 && (x < 0.0 || (x == 0.0 && (y < 0.0 || (y == 0.0 && z < 0.0)))))) {
    w = -w;
    x = -x;
    y = -y;
    z = -z;
  }
  return {w, x, y, z};
}

// --- ZYX Euler angles --------------------------------------------------------

RotationMatrix euler_zyx_to_rotmat(const EulerZyx& e) {
  require_valid(validate(e), "euler_zyx_to_rotmat");
  const double cy = std::cos(e.yaw), sy = std::sin(e.yaw);
  const double cp = std::cos(e.pitch), sp = std::sin(e.pitch);
  const double cr = std::cos(e.roll), sr = std::sin(e.roll);
  return {cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr,
          sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr,
          -sp,     cp * sr,                cp * cr};
}

EulerZyx rotmat_to_euler_zyx(const RotationMatrix& r) {
  const double sin_pitch = -r(2, 0);
  if (std::abs(sin_pitch) >= 1.0 - kGimbalTol) {
    // Gimbal lock: only yaw -/+ roll is determined; return the canonical
    // representative with roll = 0.
    if (sin_pitch > 0.0) {
      return {wrap(std::atan2(r(1, 2), r(0, 2))), kHalfPi, 0.0};
    }
    return {wrap(std::atan2(-r(1, 2), -r(0, 2))), -kHalfPi, 0.0};
  }
  return {wrap(std::atan2(r(1, 0), r(0, 0))), safe_asin(sin_pitch),
          wrap(std::atan2(r(2, 1), r(2, 2)))};
}

Quaternion euler_zyx_to_quat(const EulerZyx& e) {
  require_valid(validate(e), "euler_zyx_to_quat");
  const double cy = std::cos(0.5 * e.yaw), sy = std::sin(0.5 * e.yaw);
  const double cp = std::cos(0.5 * e.pitch), sp = std::sin(0.5 * e.pitch);
  const double cr = std::cos(0.5 * e.roll), sr = std::sin(0.5 * e.roll);
  return {cr * cp * cy + sr * sp * sy, sr * cp * cy - cr * sp * sy,
          cr * sp * cy + sr * cp * sy, cr * cp * sy - sr * sp * cy};
}

EulerZyx quat_to_euler_zyx(const Quaternion& qin) {
  require_valid(validate(qin), "quat_to_euler_zyx");
  const Quaternion q = canonical_sheet(qin);
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  const double sin_pitch = 2.0 * (w * y - x * z);
  if (std::abs(sin_pitch) >= 1.0 - kGimbalTol) {
    const double r13 = 2.0 * (x * z + w * y);
    const double r23 = 2.0 * (y * z - w * x);
    if (sin_pitch > 0.0) {
      return {wrap(std::atan2(r23, r13)), kHalfPi, 0.0};
    }
    return {wrap(std::atan2(-r23, -r13)), -kHalfPi, 0.0};
  }
  return {wrap(std::atan2(2.0 * (w * z + x * y), 1.0 - 2.0 * (y * y + z * z))),
          safe_asin(sin_pitch),
          wrap(std::atan2(2.0 * (w * x + y * z), 1.0 - 2.0 * (x * x + y * y)))};
}

// --- ZXY Euler angles --------------------------------------------------------

Quaternion euler_zxy_to_quat(const EulerZxy& e) {
  require_valid(validate(e), "euler_zxy_to_quat");
  const double cy = std::cos(0.5 * e.yaw), sy = std::sin(0.5 * e.yaw);
  const double cr = std::cos(0.5 * e.roll), sr = std::sin(0.5 * e.roll);
  const double cp = std::cos(0.5 * e.pitch), sp = std::sin(0.5 * e.pitch);
  return {cr * cp * cy - sr * sp * sy, sr * cp * cy - cr * sp * sy,
          cr * sp * cy + sr * cp * sy, cr * cp * sy + sr * sp * cy};
}

EulerZxy quat_to_euler_zxy(const Quaternion& qin) {
  require_valid(validate(qin), "quat_to_euler_zxy");
  const Quaternion q = canonical_sheet(qin);
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  const double sin_roll = 2.0 * (w * x + y * z);  // R_32
  if (std::abs(sin_roll) >= 1.0 - kGimbalTol) {
    // Canonical representative with pitch = 0.
    const double r11 = 1.0 - 2.0 * (y * y + z * z);
    const double r13 = 2.0 * (x * z + w * y);
    if (sin_roll > 0.0) {
      return {wrap(std::atan2(r13, r11)), kHalfPi, 0.0};
    }
    return {wrap(std::atan2(-r13, r11)), -kHalfPi, 0.0};
  }
  return {wrap(std::atan2(2.0 * (w * z - x * y), 1.0 - 2.0 * (x * x + z * z))),
          safe_asin(sin_roll),
          wrap(std::atan2(2.0 * (w * y - x * z), 1.0 - 2.0 * (x * x + y * y)))};
}

RotationMatrix euler_zxy_to_rotmat(const EulerZxy& e) { return quat_to_rotmat(euler_zxy_to_quat(e)); }
EulerZxy rotmat_to_euler_zxy(const RotationMatrix& r) { return quat_to_euler_zxy(rotmat_to_quat(r)); }

// --- tilt angles -------------------------------------------------------------

RotationMatrix tilt_to_rotmat(const TiltAngles& t) {
  require_valid(validate(t), "tilt_to_rotmat");
  const double cg = std::cos(t.axis_angle), sg = std::sin(t.axis_angle);
  const double ca = std::cos(t.angle), sa = std::sin(t.angle);
  const double d = t.yaw + t.axis_angle;
  const double cd = std::cos(d), sd = std::sin(d);
  return {cg * cd + ca * sg * sd, sg * cd - ca * cg * sd, sa * sd,
          cg * sd - ca * sg * cd, sg * sd + ca * cg * cd, -sa * cd,
          -sa * sg,               sa * cg,                ca};
}

TiltAngles rotmat_to_tilt(const RotationMatrix& r, bool* singular) {
  const double cos_alpha = r(2, 2);
  const double sin_alpha = std::hypot(r(2, 0), r(2, 1));
  const double alpha = std::atan2(sin_alpha, cos_alpha);
  const bool sing = cos_alpha <= -1.0 + 1e-12;
  if (singular) *singular = sing;

  if (sing) {
    // At alpha = pi only axis_angle + yaw/2 is determined; fold everything
    // into the axis angle of the canonical yaw = 0 representative.
    return {0.0, 0.5 * std::atan2(r(0, 1) + r(1, 0), r(0, 0) - r(1, 1)), alpha};
  }
  // (R21 - R12, R11 + R22) = (1 + cos alpha)(sin yaw, cos yaw) stays
  // well-conditioned everywhere away from the singularity, including pure
  // z-rotations where the bottom row carries no yaw information.
  const double yaw = wrap(std::atan2(r(1, 0) - r(0, 1), r(0, 0) + r(1, 1)));
  double axis_angle = 0.0;
  if (sin_alpha > kIdentityTiltTol) {
    axis_angle = wrap(std::atan2(-r(2, 0), r(2, 1)));
  }
  return {yaw, axis_angle, alpha};
}

Quaternion tilt_to_quat(const TiltAngles& t) {
  require_valid(validate(t), "tilt_to_quat");
  const double hy = 0.5 * t.yaw, ha = 0.5 * t.angle;
  const double d = t.axis_angle + hy;
  return {std::cos(hy) * std::cos(ha), std::sin(ha) * std::cos(d), std::sin(ha) * std::sin(d),
          std::cos(ha) * std::sin(hy)};
}

TiltAngles quat_to_tilt(const Quaternion& qin, bool* singular) {
  require_valid(validate(qin), "quat_to_tilt");
  const Quaternion q = canonical_sheet(qin);
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  const double alpha = 2.0 * std::atan2(std::hypot(x, y), std::hypot(w, z));
  const bool sing = (w * w + z * z) <= kSingularTol;
  if (singular) *singular = sing;

  if (sing) {
    return {0.0, wrap(std::atan2(y, x)), alpha};
  }
  const double half_yaw = std::atan2(z, w);  // in (-pi/2, pi/2] on the canonical sheet
  double axis_angle = 0.0;
  if (alpha > kIdentityTiltTol) {
    axis_angle = wrap(std::atan2(y, x) - half_yaw);
  }
  return {wrap(2.0 * half_yaw), axis_angle, alpha};
}

// --- fused angles ------------------------------------------------------------

FusedAngles quat_to_fused(const Quaternion& qin, bool* singular) {
  require_valid(validate(qin), "quat_to_fused");
  const Quaternion q = canonical_sheet(qin);
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  const bool sing = (w * w + z * z) <= kSingularTol;
  if (singular) *singular = sing;
  return {sing ? 0.0 : wrap(2.0 * std::atan2(z, w)),
          safe_asin(2.0 * (w * y - x * z)),
          safe_asin(2.0 * (w * x + y * z)),
          (w * w + z * z >= 0.5) ? 1 : -1};
}

Quaternion fused_to_quat(const FusedAngles& f) { return tilt_to_quat(fused_to_tilt(f)); }

FusedAngles rotmat_to_fused(const RotationMatrix& r, bool* singular) {
  const bool sing = r(2, 2) <= -1.0 + 1e-12;
  if (singular) *singular = sing;
  const double yaw = sing ? 0.0 : wrap(std::atan2(r(1, 0) - r(0, 1), r(0, 0) + r(1, 1)));
  return {yaw, safe_asin(-r(2, 0)), safe_asin(r(2, 1)), (r(2, 2) >= 0.0) ? 1 : -1};
}

RotationMatrix fused_to_rotmat(const FusedAngles& f) { return tilt_to_rotmat(fused_to_tilt(f)); }

TiltAngles fused_to_tilt(const FusedAngles& f) {
  require_valid(validate(f), "fused_to_tilt");
  const double sp = std::sin(f.pitch), sr = std::sin(f.roll);
  const double sin_alpha = std::hypot(sp, sr);
  // gamma := 0 applies to the identity region only; in the lower hemisphere a
  // tiny sine sum means alpha is near pi and the ratio still fixes the axis.
  const double axis_angle =
      (f.hemi >= 0 && sin_alpha <= kIdentityTiltTol) ? 0.0 : std::atan2(sp, sr);
  const double alpha = (f.hemi >= 0) ? safe_asin(sin_alpha) : kPi - safe_asin(sin_alpha);
  return {f.yaw, axis_angle, alpha};
}

FusedAngles tilt_to_fused(const TiltAngles& t) {
  require_valid(validate(t), "tilt_to_fused");
  const double sa = std::sin(t.angle);
  return {t.yaw, safe_asin(sa * std::sin(t.axis_angle)), safe_asin(sa * std::cos(t.axis_angle)),
          (std::cos(t.angle) >= 0.0) ? 1 : -1};
}

// --- remaining pairs, routed through the quaternion hub ----------------------

EulerZxy euler_zyx_to_euler_zxy(const EulerZyx& e) { return quat_to_euler_zxy(euler_zyx_to_quat(e)); }
EulerZyx euler_zxy_to_euler_zyx(const EulerZxy& e) { return quat_to_euler_zyx(euler_zxy_to_quat(e)); }

TiltAngles euler_zyx_to_tilt(const EulerZyx& e, bool* singular) {
  return quat_to_tilt(euler_zyx_to_quat(e), singular);
}
EulerZyx tilt_to_euler_zyx(const TiltAngles& t) { return quat_to_euler_zyx(tilt_to_quat(t)); }

FusedAngles euler_zyx_to_fused(const EulerZyx& e, bool* singular) {
  return quat_to_fused(euler_zyx_to_quat(e), singular);
}
EulerZyx fused_to_euler_zyx(const FusedAngles& f) { return quat_to_euler_zyx(fused_to_quat(f)); }

TiltAngles euler_zxy_to_tilt(const EulerZxy& e, bool* singular) {
  return quat_to_tilt(euler_zxy_to_quat(e), singular);
}
EulerZxy tilt_to_euler_zxy(const TiltAngles& t) { return quat_to_euler_zxy(tilt_to_quat(t)); }

FusedAngles euler_zxy_to_fused(const EulerZxy& e, bool* singular) {
  return quat_to_fused(euler_zxy_to_quat(e), singular);
}
EulerZxy fused_to_euler_zxy(const FusedAngles& f) { return quat_to_euler_zxy(fused_to_quat(f)); }

// --- cross-representation relations ------------------------------------------

EulerFusedRelation euler_fused_relations(const EulerZyx& e) {
  require_valid(validate(e), "euler_fused_relations");
  const double sp = std::sin(e.pitch), cp = std::cos(e.pitch);
  const double sr = std::sin(e.roll), cr = std::cos(e.roll);

  EulerFusedRelation rel;
  rel.gimbal = std::abs(e.pitch) >= kHalfPi - 1e-9;
  rel.tilt_axis_angle = wrap(std::atan2(sp, cp * sr));
  rel.fused_roll = safe_asin(cp * sr);
  rel.tilt_angle = safe_acos(cp * cr);
  rel.hemi = (cr >= 0.0) ? 1 : -1;
  rel.euler_roll_check = wrap(std::atan2(std::sin(rel.fused_roll), std::cos(rel.tilt_angle)));
  return rel;
}

double euler_yaw_from_tilt(const TiltAngles& t, bool* gimbal) {
  require_valid(validate(t), "euler_yaw_from_tilt");
  const double sa = std::sin(t.angle);
  const double cg = std::cos(t.axis_angle), sg = std::sin(t.axis_angle);
  if (gimbal) *gimbal = std::abs(sa * sg) >= 1.0 - 1e-9;
  return wrap(t.yaw + t.axis_angle - std::atan2(std::cos(t.angle) * sg, cg));
}

double fused_yaw_from_euler(const EulerZyx& e, bool* singular) {
  require_valid(validate(e), "fused_yaw_from_euler");
  const double sp = std::sin(e.pitch), cp = std::cos(e.pitch);
  const double sr = std::sin(e.roll), cr = std::cos(e.roll);
  if (singular) *singular = cp * cr <= -1.0 + 1e-12;
  // Written in terms of the fused pitch/roll sines of the same rotation,
  // sin(theta) = sp and sin(phi) = cp * sr.
  return wrap(e.yaw - std::atan2(sp, cp * sr) + std::atan2(sp * cr, sr));
}

}  // namespace rotkit
