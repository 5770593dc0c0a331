#include "rotkit/validate.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <sstream>

namespace rotkit {

namespace {

constexpr double kOrthoTol = 1e-12;
constexpr double kSineSumTol = 1e-12;
constexpr double kAngleSumTol = 1e-9;  // the angle form is less sharp near the boundary

void add(ValidationReport& rep, double residual, const std::string& message) {
  rep.issues.push_back({message, residual});
}

bool finite_fields(ValidationReport& rep, std::initializer_list<double> fields,
                   const char* type_name) {
  for (double f : fields) {
    if (!std::isfinite(f)) {
      add(rep, std::numeric_limits<double>::quiet_NaN(),
          std::string(type_name) + ": non-finite field");
      return false;
    }
  }
  return true;
}

void check_wrapped(ValidationReport& rep, double value, const char* name) {
  if (!(value > -kPi && value <= kPi)) {
    std::ostringstream os;
    os << name << " = " << value << " outside (-pi, pi]";
    add(rep, std::abs(value) - kPi, os.str());
  }
}

void check_range(ValidationReport& rep, double value, double lo, double hi, const char* name) {
  if (!(value >= lo && value <= hi)) {
    std::ostringstream os;
    os << name << " = " << value << " outside [" << lo << ", " << hi << "]";
    add(rep, std::max(lo - value, value - hi), os.str());
  }
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += issue.message;
  }
  return out;
}

ValidationReport validate(const Quaternion& q) {
  ValidationReport rep;
  if (!finite_fields(rep, {q.w, q.x, q.y, q.z}, "quaternion")) return rep;
  const double sq = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
  if (std::abs(sq - 1.0) > kOrthoTol) {
    std::ostringstream os;
    os << "quaternion norm^2 deviates from 1 by " << std::abs(sq - 1.0);
    add(rep, std::abs(sq - 1.0), os.str());
  }
  return rep;
}

ValidationReport validate(const RotationMatrix& r) {
  ValidationReport rep;
  bool all_finite = true;
  for (double v : r.m) all_finite = all_finite && std::isfinite(v);
  if (!all_finite) {
    add(rep, std::numeric_limits<double>::quiet_NaN(), "rotation matrix: non-finite entry");
    return rep;
  }

  const RotationMatrix gram = r.transposed() * r;
  double max_dev = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      max_dev = std::max(max_dev, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
    }
  }
  if (max_dev > kOrthoTol) {
    std::ostringstream os;
    os << "rotation matrix not orthonormal, max |R^T R - I| = " << max_dev;
    add(rep, max_dev, os.str());
  }

  const double det = r(0, 0) * (r(1, 1) * r(2, 2) - r(1, 2) * r(2, 1)) -
                     r(0, 1) * (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0)) +
                     r(0, 2) * (r(1, 0) * r(2, 1) - r(1, 1) * r(2, 0));
  if (std::abs(det - 1.0) > kOrthoTol) {
    std::ostringstream os;
    os << "rotation matrix determinant " << det << " deviates from 1";
    add(rep, std::abs(det - 1.0), os.str());
  }
  return rep;
}

ValidationReport validate(const EulerZyx& e) {
  ValidationReport rep;
  if (!finite_fields(rep, {e.yaw, e.pitch, e.roll}, "euler-zyx")) return rep;
  check_wrapped(rep, e.yaw, "euler-zyx yaw");
  check_range(rep, e.pitch, -kHalfPi, kHalfPi, "euler-zyx pitch");
  check_wrapped(rep, e.roll, "euler-zyx roll");
  return rep;
}

ValidationReport validate(const EulerZxy& e) {
  ValidationReport rep;
  if (!finite_fields(rep, {e.yaw, e.roll, e.pitch}, "euler-zxy")) return rep;
  check_wrapped(rep, e.yaw, "euler-zxy yaw");
  check_range(rep, e.roll, -kHalfPi, kHalfPi, "euler-zxy roll");
  check_wrapped(rep, e.pitch, "euler-zxy pitch");
  return rep;
}

ValidationReport validate(const TiltAngles& t) {
  ValidationReport rep;
  if (!finite_fields(rep, {t.yaw, t.axis_angle, t.angle}, "tilt")) return rep;
  check_wrapped(rep, t.yaw, "tilt yaw");
  check_wrapped(rep, t.axis_angle, "tilt axis angle");
  check_range(rep, t.angle, 0.0, kPi, "tilt angle");
  return rep;
}

ValidationReport validate(const FusedAngles& f) {
  ValidationReport rep;
  if (!finite_fields(rep, {f.yaw, f.pitch, f.roll}, "fused")) return rep;
  check_wrapped(rep, f.yaw, "fused yaw");
  check_range(rep, f.pitch, -kHalfPi, kHalfPi, "fused pitch");
  check_range(rep, f.roll, -kHalfPi, kHalfPi, "fused roll");
  if (f.hemi != 1 && f.hemi != -1) {
    std::ostringstream os;
    os << "fused hemisphere " << f.hemi << " not in {-1, +1}";
    add(rep, 0.0, os.str());
  }

  const double sp = std::sin(f.pitch), sr = std::sin(f.roll);
  const double sine_sum = sp * sp + sr * sr;
  if (sine_sum > 1.0 + kSineSumTol) {
    std::ostringstream os;
    os << "sine sum criterion violated: sin^2(pitch) + sin^2(roll) = " << sine_sum << " > 1";
    add(rep, sine_sum - 1.0, os.str());
  } else if (std::abs(f.pitch) + std::abs(f.roll) > kHalfPi + kAngleSumTol) {
    std::ostringstream os;
    os << "sine sum criterion violated: |pitch| + |roll| = "
       << std::abs(f.pitch) + std::abs(f.roll) << " > pi/2";
    add(rep, std::abs(f.pitch) + std::abs(f.roll) - kHalfPi, os.str());
  }
  return rep;
}

}  // namespace rotkit
