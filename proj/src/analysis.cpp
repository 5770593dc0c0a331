#include "rotkit/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "rotkit/convert.hpp"
#include "rotkit/ops.hpp"

namespace rotkit {

namespace {

// Uniform grid of n angles covering (-pi, pi], endpoint included.
double grid_angle(int index, int n) { return -kPi + kTwoPi * double(index + 1) / n; }

}  // namespace

std::vector<TiltSweepSample> tilt_sweep(double alpha_max, int n_radial, int n_angular) {
  if (!(alpha_max > 0.0 && alpha_max <= kPi - 1e-6)) {
    throw std::invalid_argument("tilt_sweep: alpha_max must be in (0, pi - 1e-6]");
  }
  if (n_radial < 1 || n_angular < 1) {
    throw std::invalid_argument("tilt_sweep: grid sizes must be positive");
  }

  std::vector<TiltSweepSample> samples;
  samples.reserve(static_cast<std::size_t>(n_radial) * n_angular);
  for (int i = 0; i < n_radial; ++i) {
    const double alpha = alpha_max * double(i + 1) / n_radial;
    for (int j = 0; j < n_angular; ++j) {
      const double gamma = grid_angle(j, n_angular);
      const TiltAngles tilt(0.0, gamma, alpha);
      TiltSweepSample s;
      s.x = alpha * std::cos(gamma);
      s.y = alpha * std::sin(gamma);
      s.axis_angle = gamma;
      s.tilt_angle = alpha;
      s.fused = tilt_to_fused(tilt);
      s.euler = tilt_to_euler_zyx(tilt);
      samples.push_back(s);
    }
  }
  return samples;
}

SensitivityProbe euler_sensitivity_probe(double alpha, double gamma_center, double delta) {
  if (!(alpha > 0.0 && alpha < kPi)) {
    throw std::invalid_argument("euler_sensitivity_probe: alpha must be in (0, pi)");
  }
  if (!(delta > 0.0 && delta <= 0.1)) {
    throw std::invalid_argument("euler_sensitivity_probe: delta must be in (0, 0.1]");
  }

  const TiltAngles hi_tilt(0.0, wrap(gamma_center + delta), alpha);
  const TiltAngles lo_tilt(0.0, wrap(gamma_center - delta), alpha);
  const EulerZyx hi_euler = tilt_to_euler_zyx(hi_tilt);
  const EulerZyx lo_euler = tilt_to_euler_zyx(lo_tilt);
  const FusedAngles hi_fused = tilt_to_fused(hi_tilt);
  const FusedAngles lo_fused = tilt_to_fused(lo_tilt);

  const double inv_span = 1.0 / (2.0 * delta);
  SensitivityProbe p;
  p.tilt_angle = alpha;
  p.gamma_center = gamma_center;
  p.delta = delta;
  p.slope_euler_yaw = std::abs(wrap(hi_euler.yaw - lo_euler.yaw)) * inv_span;
  p.slope_euler_roll = std::abs(wrap(hi_euler.roll - lo_euler.roll)) * inv_span;
  p.slope_fused_yaw = std::abs(wrap(hi_fused.yaw - lo_fused.yaw)) * inv_span;
  p.slope_fused_pitch_ratio =
      std::abs(std::sin(hi_fused.pitch) - std::sin(lo_fused.pitch)) * inv_span;
  p.slope_fused_roll_ratio =
      std::abs(std::sin(hi_fused.roll) - std::sin(lo_fused.roll)) * inv_span;
  p.near_gimbal = std::max(std::abs(hi_euler.pitch), std::abs(lo_euler.pitch)) > kHalfPi - 1e-6;
  return p;
}

AxisymScan axisym_scan(const Quaternion& base, int n_beta) {
  if (n_beta < 1) throw std::invalid_argument("axisym_scan: n_beta must be positive");

  bool singular = false;
  AxisymScan scan;
  scan.base_fused = quat_to_fused(base, &singular);
  if (singular) throw SingularError("axisym_scan: base rotation has singular fused yaw");
  scan.base_tilt = quat_to_tilt(base);

  scan.samples.reserve(n_beta);
  for (int k = 0; k < n_beta; ++k) {
    const double beta = grid_angle(k, n_beta);
    AxisymSample s;
    s.beta = beta;
    s.quat = compose(quat_z(-beta), compose(base, quat_z(beta)));
    s.fused = quat_to_fused(s.quat);
    s.tilt = quat_to_tilt(s.quat);
    s.euler_zyx = quat_to_euler_zyx(s.quat);
    s.euler_zxy = quat_to_euler_zxy(s.quat);
    s.sin_fused_roll = std::sin(s.fused.roll);
    s.sin_fused_pitch = std::sin(s.fused.pitch);
    s.sin_euler_roll = std::sin(s.euler_zyx.roll);
    s.sin_euler_pitch = std::sin(s.euler_zyx.pitch);
    scan.samples.push_back(s);
  }
  return scan;
}

AxisymResiduals axisym_residuals(const AxisymScan& scan, const AxisymSample& sample) {
  AxisymResiduals r;
  r.yaw = angle_dist(sample.fused.yaw, scan.base_fused.yaw);
  r.tilt_angle = std::abs(sample.tilt.angle - scan.base_tilt.angle);
  r.axis_angle = angle_dist(sample.tilt.axis_angle, scan.base_tilt.axis_angle - sample.beta);
  r.hemi_equal = sample.fused.hemi == scan.base_fused.hemi;

  // Quadrature identity: the sine ratios rotate clockwise by beta.
  const double cb = std::cos(sample.beta), sb = std::sin(sample.beta);
  const double sr0 = std::sin(scan.base_fused.roll), sp0 = std::sin(scan.base_fused.pitch);
  const double roll_pred = cb * sr0 + sb * sp0;
  const double pitch_pred = -sb * sr0 + cb * sp0;
  r.quadrature = std::max(std::abs(sample.sin_fused_roll - roll_pred),
                          std::abs(sample.sin_fused_pitch - pitch_pred));
  return r;
}

std::vector<LevelSetCurve> level_sets(LevelSetRepr repr, std::span<const double> alphas,
                                      int n_gamma) {
  if (n_gamma < 1) throw std::invalid_argument("level_sets: n_gamma must be positive");
  for (double alpha : alphas) {
    if (!(alpha > 0.0 && alpha <= kHalfPi)) {
      throw std::invalid_argument("level_sets: each alpha must be in (0, pi/2]");
    }
  }

  std::vector<LevelSetCurve> curves;
  curves.reserve(alphas.size());
  for (double alpha : alphas) {
    LevelSetCurve curve;
    curve.tilt_angle = alpha;
    curve.repr = repr;
    curve.points.reserve(n_gamma);
    for (int j = 0; j < n_gamma; ++j) {
      const double gamma = grid_angle(j, n_gamma);
      const TiltAngles tilt(0.0, gamma, alpha);
      LevelSetPoint p;
      p.axis_angle = gamma;
      if (repr == LevelSetRepr::fused) {
        const FusedAngles f = tilt_to_fused(tilt);
        p.sin_roll = std::sin(f.roll);
        p.sin_pitch = std::sin(f.pitch);
      } else {
        const EulerZyx e = tilt_to_euler_zyx(tilt);
        p.sin_roll = std::sin(e.roll);
        p.sin_pitch = std::sin(e.pitch);
      }
      curve.points.push_back(p);
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace rotkit
