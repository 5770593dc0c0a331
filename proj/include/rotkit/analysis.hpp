// Comparative experiments on the fused vs Euler parameterisations:
// tilt-sweep parameter maps, finite-difference sensitivity probes,
// axisymmetry scans under re-choice of the global x/y axes, and level sets
// of constant sin(alpha) in sine-ratio space.
//
// All scans are deterministic and ordered by grid index.
#pragma once

#include <span>
#include <vector>

#include "rotkit/types.hpp"

namespace rotkit {

// One grid point of a pure tilt rotation T(0, gamma, alpha), placed at
// (x, y) = (alpha cos gamma, alpha sin gamma), with the fused and ZYX Euler
// parameters of that rotation.
struct TiltSweepSample {
  double x = 0.0, y = 0.0;
  double axis_angle = 0.0;  // gamma
  double tilt_angle = 0.0;  // alpha
  FusedAngles fused;
  EulerZyx euler;
};

// Radial-major grid: alpha takes n_radial values in (0, alpha_max], gamma
// takes n_angular values covering (-pi, pi].
std::vector<TiltSweepSample> tilt_sweep(double alpha_max, int n_radial, int n_angular);

// Central finite-difference slope magnitudes across gamma_center for the
// pure tilt rotation family T(0, gamma, alpha). Euler yaw/roll slopes are of
// the angles themselves; the fused pitch/roll slopes are of the sine ratios
// (bounded by 1 for any tilt family). The fused yaw slope is identically 0.
struct SensitivityProbe {
  double tilt_angle = 0.0;
  double gamma_center = 0.0;
  double delta = 0.0;
  double slope_euler_yaw = 0.0;
  double slope_euler_roll = 0.0;
  double slope_fused_yaw = 0.0;
  double slope_fused_pitch_ratio = 0.0;
  double slope_fused_roll_ratio = 0.0;
  bool near_gimbal = false;  // stencil Euler pitch within 1e-6 of +-pi/2
};
SensitivityProbe euler_sensitivity_probe(double alpha, double gamma_center, double delta);

// One sample of the conjugated rotation Rz(-beta) * R0 * Rz(beta), i.e. the
// base rotation re-expressed after rotating the global x/y axes by beta.
struct AxisymSample {
  double beta = 0.0;
  Quaternion quat;
  FusedAngles fused;
  TiltAngles tilt;
  EulerZyx euler_zyx;
  EulerZxy euler_zxy;
  double sin_fused_roll = 0.0, sin_fused_pitch = 0.0;
  double sin_euler_roll = 0.0, sin_euler_pitch = 0.0;
};

struct AxisymScan {
  FusedAngles base_fused;
  TiltAngles base_tilt;
  std::vector<AxisymSample> samples;  // beta over a uniform grid of (-pi, pi]
};

// Throws SingularError if the base rotation has singular fused yaw.
AxisymScan axisym_scan(const Quaternion& base, int n_beta);

// Residuals of one sample against the axisymmetry predictions from the base
// parameters: yaw/tilt-angle invariance, axis angle shifted by -beta, exact
// hemisphere equality, and the clockwise 2D rotation of the sine ratios.
struct AxisymResiduals {
  double yaw = 0.0;
  double tilt_angle = 0.0;
  double axis_angle = 0.0;
  double quadrature = 0.0;
  bool hemi_equal = true;
};
AxisymResiduals axisym_residuals(const AxisymScan& scan, const AxisymSample& sample);

// Level sets of constant sin(alpha) in (sin roll, sin pitch) space, traced
// by sweeping the tilt axis angle. Fused curves are exact circles of radius
// sin(alpha); Euler curves are not circular.
enum class LevelSetRepr { fused, euler };

struct LevelSetPoint {
  double axis_angle = 0.0;  // gamma used to generate the point
  double sin_roll = 0.0;
  double sin_pitch = 0.0;
};

struct LevelSetCurve {
  double tilt_angle = 0.0;  // alpha, in (0, pi/2]
  LevelSetRepr repr = LevelSetRepr::fused;
  std::vector<LevelSetPoint> points;
};

std::vector<LevelSetCurve> level_sets(LevelSetRepr repr, std::span<const double> alphas,
                                      int n_gamma);

}  // namespace rotkit
