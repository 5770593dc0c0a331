#include "rotkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rotkit::oracle {

namespace {

constexpr double kRefuseMargin = 1e-6;  // parameter-space distance to a singularity

// Self-contained quaternion helpers so that this module shares no code with
// the closed-form conversion path.
Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
          a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x};
}

// Rotates v by q via the sandwich product q (0, v) q*.
Vec3 sandwich(const Quaternion& q, const Vec3& v) {
  const Quaternion p = mul(mul(q, Quaternion(0, v.x, v.y, v.z)), q.conjugate());
  return {p.x, p.y, p.z};
}

Quaternion axis_angle_quat(const Vec3& unit_axis, double angle) {
  const double h = 0.5 * angle;
  const double s = std::sin(h);
  return {std::cos(h), s * unit_axis.x, s * unit_axis.y, s * unit_axis.z};
}

// Shortest-arc rotation taking unit vector a onto unit vector b. Near the
// antipodal case any half-turn about an axis perpendicular to a works; the
// caller must tolerate that freedom.
Quaternion shortest_arc(const Vec3& a, const Vec3& b) {
  const double d = dot(a, b);
  if (1.0 + d < 1e-8) {
    Vec3 axis = cross(a, Vec3{1, 0, 0});
    if (norm(axis) < 1e-6) axis = cross(a, Vec3{0, 1, 0});
    axis = normalized(axis);
    const double angle = std::atan2(norm(cross(a, b)), d);
    // Rotate within the plane spanned by a and b when they still define one.
    const Vec3 ab = cross(a, b);
    if (norm(ab) > 1e-12) return axis_angle_quat(normalized(ab), angle);
    return axis_angle_quat(axis, kPi);
  }
  const Vec3 v = cross(a, b);
  const double w = 1.0 + d;
  const double n = std::sqrt(w * w + v.x * v.x + v.y * v.y + v.z * v.z);
  return {w / n, v.x / n, v.y / n, v.z / n};
}

constexpr Vec3 kX{1, 0, 0};
constexpr Vec3 kY{0, 1, 0};
constexpr Vec3 kZ{0, 0, 1};

Quaternion pure_z_quat(double angle) { return {std::cos(0.5 * angle), 0, 0, std::sin(0.5 * angle)}; }

// Splits q into the z-rotation from the global frame to the intermediate
// frame (the fused yaw) and the remaining tilt. The intermediate frame is
// reached by rotating the body z-axis onto the global z-axis along the great
// circle through both.
struct YawTiltSplit {
  double yaw;         // fused yaw
  double axis_delta;  // global heading of the tilt axis, yaw + gamma
  double angle;       // tilt angle alpha
};

YawTiltSplit split_yaw_tilt(const Quaternion& q) {
  const Vec3 body_z = sandwich(q, kZ);  // body z-axis in global coordinates
  const double alpha = std::atan2(std::hypot(body_z.x, body_z.y), body_z.z);
  if (alpha > kPi - kRefuseMargin) {
    throw std::domain_error("oracle: rotation too close to the fused yaw singularity");
  }

  // Align the body z-axis back onto global z; what remains is a pure
  // z-rotation whose angle is the fused yaw.
  const Quaternion align = shortest_arc(body_z, kZ);
  const Quaternion z_only = mul(align, q);
  const double yaw = 2.0 * std::atan2(z_only.z, z_only.w);

  YawTiltSplit split;
  split.yaw = wrap(yaw);
  split.angle = alpha;
  if (alpha <= 1e-12) {
    split.axis_delta = split.yaw;  // gamma convention 0 at identity tilt
  } else {
    const Vec3 axis = normalized(cross(kZ, body_z));  // tilt axis, global frame
    split.axis_delta = std::atan2(axis.y, axis.x);
  }
  return split;
}

}  // namespace

// --- random rotations ---------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_uniform(std::uint64_t& state) {
  return double(splitmix64(state) >> 11) * 0x1.0p-53;  // [0, 1)
}

}  // namespace

double RandomRotationStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(state_);
}

double RandomRotationStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller on (0, 1] x [0, 1) uniforms.
  const double u1 = 1.0 - unit_uniform(state_);
  const double u2 = unit_uniform(state_);
  const double r = std::sqrt(-2.0 * std::log(u1));
  cached_normal_ = r * std::sin(kTwoPi * u2);
  has_cached_normal_ = true;
  return r * std::cos(kTwoPi * u2);
}

Quaternion RandomRotationStream::next(double alpha_cap) {
  if (!(alpha_cap > 0.0 && alpha_cap <= kPi)) {
    throw std::invalid_argument("RandomRotationStream: alpha_cap must be in (0, pi]");
  }
  for (;;) {
    const double a = normal(), b = normal(), c = normal(), d = normal();
    const double n = std::sqrt(a * a + b * b + c * c + d * d);
    if (n < 1e-6) continue;
    const Quaternion q(a / n, b / n, c / n, d / n);
    const double alpha = 2.0 * std::atan2(std::hypot(q.x, q.y), std::hypot(q.w, q.z));
    if (alpha <= alpha_cap) return q;
  }
}

RandomRotationStream RandomRotationStream::substream(std::uint64_t id) const {
  std::uint64_t s = state_ ^ (0x632be59bd9b4e019ULL * (id + 1));
  return RandomRotationStream(splitmix64(s));
}

std::vector<Quaternion> random_rotations(std::uint64_t seed, int count, double alpha_cap) {
  if (count < 1) throw std::invalid_argument("random_rotations: count must be positive");
  RandomRotationStream stream(seed);
  std::vector<Quaternion> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(stream.next(alpha_cap));
  return out;
}

// --- construction from parameters ----------------------------------------------

Quaternion quat_from_euler_zyx(const EulerZyx& e) {
  return mul(pure_z_quat(e.yaw), mul(axis_angle_quat(kY, e.pitch), axis_angle_quat(kX, e.roll)));
}

Quaternion quat_from_euler_zxy(const EulerZxy& e) {
  return mul(pure_z_quat(e.yaw), mul(axis_angle_quat(kX, e.roll), axis_angle_quat(kY, e.pitch)));
}

Quaternion quat_from_tilt(const TiltAngles& t) {
  const Vec3 axis{std::cos(t.axis_angle), std::sin(t.axis_angle), 0.0};
  return mul(pure_z_quat(t.yaw), axis_angle_quat(axis, t.angle));
}

Quaternion quat_from_fused(const FusedAngles& f) {
  // The global z-axis expressed in body coordinates, straight from the
  // definition of fused pitch, roll and hemisphere.
  const double sp = std::sin(f.pitch), sr = std::sin(f.roll);
  const double zsq = std::max(0.0, 1.0 - sp * sp - sr * sr);
  const Vec3 up_in_body{-sp, sr, (f.hemi >= 0 ? 1.0 : -1.0) * std::sqrt(zsq)};
  // The zero-yaw tilt takes that direction back onto the body z-axis.
  const Quaternion tilt = shortest_arc(up_in_body, kZ);
  return mul(pure_z_quat(f.yaw), tilt);
}

Quaternion quat_from_rotmat(const RotationMatrix& r) {
  // Frame alignment by two arcs: take global x to the body x-axis, then
  // swing the image of y around it onto the body y-axis.
  const Vec3 bx = r.col(0), by = r.col(1);
  const Quaternion first = shortest_arc(kX, bx);
  const Vec3 mid_y = sandwich(first, kY);
  const double twist = std::atan2(dot(cross(mid_y, by), bx), dot(mid_y, by));
  const Quaternion second = axis_angle_quat(normalized(bx), twist);
  return mul(second, first);
}

RotationMatrix rotmat_from_quat(const Quaternion& q) {
  const Vec3 cx = sandwich(q, kX), cy = sandwich(q, kY), cz = sandwich(q, kZ);
  return {cx.x, cy.x, cz.x, cx.y, cy.y, cz.y, cx.z, cy.z, cz.z};
}

// --- extraction from frame geometry --------------------------------------------

TiltAngles tilt_from_quat(const Quaternion& q) {
  const YawTiltSplit split = split_yaw_tilt(q);
  const double gamma = (split.angle <= 1e-12) ? 0.0 : wrap(split.axis_delta - split.yaw);
  return {split.yaw, gamma, split.angle};
}

FusedAngles fused_from_quat(const Quaternion& q) {
  const YawTiltSplit split = split_yaw_tilt(q);
  // Signed angles between the global up direction and the body yz / xz
  // planes, measured from the up direction expressed in body coordinates.
  const Vec3 up_in_body = sandwich(q.conjugate(), kZ);
  return {split.yaw, std::asin(std::clamp(-up_in_body.x, -1.0, 1.0)),
          std::asin(std::clamp(up_in_body.y, -1.0, 1.0)), up_in_body.z >= 0.0 ? 1 : -1};
}

EulerZyx euler_zyx_from_quat(const Quaternion& q) {
  const Vec3 bx = sandwich(q, kX);
  const double pitch = std::atan2(-bx.z, std::hypot(bx.x, bx.y));
  if (std::abs(pitch) > kHalfPi - kRefuseMargin) {
    throw std::domain_error("oracle: rotation too close to ZYX gimbal lock");
  }
  const double yaw = std::atan2(bx.y, bx.x);
  // Roll is the angle of the body y-axis about the body x-axis, measured
  // from the horizontal node direction.
  const Vec3 node = normalized(cross(kZ, bx));
  const Vec3 up_ref = cross(bx, node);
  const Vec3 by = sandwich(q, kY);
  const double roll = std::atan2(dot(by, up_ref), dot(by, node));
  return {wrap(yaw), pitch, wrap(roll)};
}

EulerZxy euler_zxy_from_quat(const Quaternion& q) {
  const Vec3 by = sandwich(q, kY);
  const double roll = std::atan2(by.z, std::hypot(by.x, by.y));
  if (std::abs(roll) > kHalfPi - kRefuseMargin) {
    throw std::domain_error("oracle: rotation too close to ZXY gimbal lock");
  }
  const double yaw = std::atan2(-by.x, by.y);
  const Vec3 node = normalized(cross(by, kZ));  // x-axis after the yaw rotation
  const Vec3 swing_ref = cross(by, node);
  const Vec3 bx = sandwich(q, kX);
  const double pitch = std::atan2(dot(bx, swing_ref), dot(bx, node));
  return {wrap(yaw), roll, wrap(pitch)};
}

}  // namespace rotkit::oracle
