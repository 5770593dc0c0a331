#include "rotkit/types.hpp"

#include <cmath>

namespace rotkit {

double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (n < 1e-300) throw std::invalid_argument("normalized: near-zero vector");
  return {v.x / n, v.y / n, v.z / n};
}

Quaternion::Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {
  const double sq = w * w + x * x + y * y + z * z;
  // Norms already unit to well within the 1e-12 invariant are left bit-exact
  // (negation and conjugation must not perturb components); small deviations
  // are rounding noise and get fixed; anything worse stays so that validate()
  // can report it.
  if (std::isfinite(sq) && std::abs(sq - 1.0) > 1e-13 && std::abs(sq - 1.0) <= 2.1e-6) {
    const double n = std::sqrt(sq);
    w /= n;
    x /= n;
    y /= n;
    z /= n;
  }
}

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

RotationMatrix RotationMatrix::transposed() const {
  return {m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]};
}

RotationMatrix operator*(const RotationMatrix& a, const RotationMatrix& b) {
  RotationMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    }
  }
  return out;
}

Vec3 operator*(const RotationMatrix& a, const Vec3& v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

RotationMatrix rotmat_x(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {1, 0, 0, 0, c, -s, 0, s, c};
}

RotationMatrix rotmat_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c, 0, s, 0, 1, 0, -s, 0, c};
}

RotationMatrix rotmat_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c, -s, 0, s, c, 0, 0, 0, 1};
}

Quaternion quat_x(double angle) { return {std::cos(0.5 * angle), std::sin(0.5 * angle), 0, 0}; }
Quaternion quat_y(double angle) { return {std::cos(0.5 * angle), 0, std::sin(0.5 * angle), 0}; }
Quaternion quat_z(double angle) { return {std::cos(0.5 * angle), 0, 0, std::sin(0.5 * angle)}; }

}  // namespace rotkit
