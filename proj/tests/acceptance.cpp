// Acceptance suite: end-to-end checks of the library's numerical contracts,
// printed as one pass/fail line per criterion. Exits non-zero if any fail.
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "helpers.hpp"
#include "rotkit/analysis.hpp"
#include "rotkit/convert.hpp"
#include "rotkit/ops.hpp"
#include "rotkit/oracle.hpp"

using namespace rotkit;
using namespace rotkit::test;

namespace {

struct Check {
  bool passed = true;
  std::string detail;

  void le(double value, double tolerance, const char* what) {
    if (!(value <= tolerance)) fail_with_value(what, value, tolerance);
  }
  void gt(double value, double threshold, const char* what) {
    if (!(value > threshold)) fail_with_value(what, value, threshold);
  }
  void is_true(bool condition, const char* what) {
    if (!condition && passed) {
      passed = false;
      detail = what;
    }
  }
  void fail_with_value(const char* what, double value, double bound) {
    if (!passed) return;
    passed = false;
    std::ostringstream os;
    os << what << " (got " << value << ", bound " << bound << ")";
    detail = os.str();
  }
};

// --- generic conversion plumbing over the six representations -------------------

Quaternion lib_to_quat(const Quaternion& v) { return v; }
Quaternion lib_to_quat(const RotationMatrix& v) { return rotmat_to_quat(v); }
Quaternion lib_to_quat(const EulerZyx& v) { return euler_zyx_to_quat(v); }
Quaternion lib_to_quat(const EulerZxy& v) { return euler_zxy_to_quat(v); }
Quaternion lib_to_quat(const TiltAngles& v) { return tilt_to_quat(v); }
Quaternion lib_to_quat(const FusedAngles& v) { return fused_to_quat(v); }

template <class T> T lib_from_quat(const Quaternion& q);
template <> Quaternion lib_from_quat(const Quaternion& q) { return q; }
template <> RotationMatrix lib_from_quat(const Quaternion& q) { return quat_to_rotmat(q); }
template <> EulerZyx lib_from_quat(const Quaternion& q) { return quat_to_euler_zyx(q); }
template <> EulerZxy lib_from_quat(const Quaternion& q) { return quat_to_euler_zxy(q); }
template <> TiltAngles lib_from_quat(const Quaternion& q) { return quat_to_tilt(q); }
template <> FusedAngles lib_from_quat(const Quaternion& q) { return quat_to_fused(q); }

Quaternion oracle_to_quat(const Quaternion& v) { return v; }
Quaternion oracle_to_quat(const RotationMatrix& v) { return oracle::quat_from_rotmat(v); }
Quaternion oracle_to_quat(const EulerZyx& v) { return oracle::quat_from_euler_zyx(v); }
Quaternion oracle_to_quat(const EulerZxy& v) { return oracle::quat_from_euler_zxy(v); }
Quaternion oracle_to_quat(const TiltAngles& v) { return oracle::quat_from_tilt(v); }
Quaternion oracle_to_quat(const FusedAngles& v) { return oracle::quat_from_fused(v); }

template <class T> T oracle_from_quat(const Quaternion& q);
template <> Quaternion oracle_from_quat(const Quaternion& q) { return q; }
template <> RotationMatrix oracle_from_quat(const Quaternion& q) { return oracle::rotmat_from_quat(q); }
template <> EulerZyx oracle_from_quat(const Quaternion& q) { return oracle::euler_zyx_from_quat(q); }
template <> EulerZxy oracle_from_quat(const Quaternion& q) { return oracle::euler_zxy_from_quat(q); }
template <> TiltAngles oracle_from_quat(const Quaternion& q) { return oracle::tilt_from_quat(q); }
template <> FusedAngles oracle_from_quat(const Quaternion& q) { return oracle::fused_from_quat(q); }

double dist(const Quaternion& a, const Quaternion& b) { return quat_dist(a, b); }
double dist(const RotationMatrix& a, const RotationMatrix& b) { return mat_dist(a, b); }
double dist(const EulerZyx& a, const EulerZyx& b) { return euler_zyx_dist(a, b); }
double dist(const EulerZxy& a, const EulerZxy& b) { return euler_zxy_dist(a, b); }
double dist(const TiltAngles& a, const TiltAngles& b) { return tilt_dist(a, b); }
double dist(const FusedAngles& a, const FusedAngles& b) {
  return a.hemi == b.hemi ? fused_dist(a, b) : 1.0;
}

// Direct library conversion between any two representations.
template <class S, class T>
T lib_direct(const S& s) {
  using std::is_same_v;
  if constexpr (is_same_v<S, T>) {
    return s;
  } else if constexpr (is_same_v<S, Quaternion>) {
    return lib_from_quat<T>(s);
  } else if constexpr (is_same_v<T, Quaternion>) {
    return lib_to_quat(s);
  } else if constexpr (is_same_v<S, RotationMatrix>) {
    if constexpr (is_same_v<T, EulerZyx>) return rotmat_to_euler_zyx(s);
    else if constexpr (is_same_v<T, EulerZxy>) return rotmat_to_euler_zxy(s);
    else if constexpr (is_same_v<T, TiltAngles>) return rotmat_to_tilt(s);
    else return rotmat_to_fused(s);
  } else if constexpr (is_same_v<S, EulerZyx>) {
    if constexpr (is_same_v<T, RotationMatrix>) return euler_zyx_to_rotmat(s);
    else if constexpr (is_same_v<T, EulerZxy>) return euler_zyx_to_euler_zxy(s);
    else if constexpr (is_same_v<T, TiltAngles>) return euler_zyx_to_tilt(s);
    else return euler_zyx_to_fused(s);
  } else if constexpr (is_same_v<S, EulerZxy>) {
    if constexpr (is_same_v<T, RotationMatrix>) return euler_zxy_to_rotmat(s);
    else if constexpr (is_same_v<T, EulerZyx>) return euler_zxy_to_euler_zyx(s);
    else if constexpr (is_same_v<T, TiltAngles>) return euler_zxy_to_tilt(s);
    else return euler_zxy_to_fused(s);
  } else if constexpr (is_same_v<S, TiltAngles>) {
    if constexpr (is_same_v<T, RotationMatrix>) return tilt_to_rotmat(s);
    else if constexpr (is_same_v<T, EulerZyx>) return tilt_to_euler_zyx(s);
    else if constexpr (is_same_v<T, EulerZxy>) return tilt_to_euler_zxy(s);
    else return tilt_to_fused(s);
  } else {
    if constexpr (is_same_v<T, RotationMatrix>) return fused_to_rotmat(s);
    else if constexpr (is_same_v<T, EulerZyx>) return fused_to_euler_zyx(s);
    else if constexpr (is_same_v<T, EulerZxy>) return fused_to_euler_zxy(s);
    else return fused_to_tilt(s);
  }
}

template <class S, class T>
void check_pair(const S& sval, Check& c) {
  if constexpr (std::is_same_v<S, T>) {
    return;
  } else {
    const T direct = lib_direct<S, T>(sval);
    const T hub = lib_from_quat<T>(lib_to_quat(sval));
    c.le(dist(direct, hub), 1e-9, "direct path deviates from quaternion hub");
    const T via_oracle = oracle_from_quat<T>(oracle_to_quat(sval));
    c.le(dist(direct, via_oracle), 1e-8, "closed form deviates from geometric oracle");
  }
}

template <class S>
void check_all_targets(const S& sval, Check& c) {
  check_pair<S, Quaternion>(sval, c);
  check_pair<S, RotationMatrix>(sval, c);
  check_pair<S, EulerZyx>(sval, c);
  check_pair<S, EulerZxy>(sval, c);
  check_pair<S, TiltAngles>(sval, c);
  check_pair<S, FusedAngles>(sval, c);
}

// Random rotation with tilt angle cap pi - 1e-3 and margin 1e-3 to both the
// ZYX and ZXY gimbal locks.
Quaternion sample_rotation(oracle::RandomRotationStream& rng) {
  for (;;) {
    const Quaternion q = rng.next(kPi - 1e-3);
    if (std::abs(quat_to_euler_zyx(q).pitch) > kHalfPi - 1e-3) continue;
    if (std::abs(quat_to_euler_zxy(q).roll) > kHalfPi - 1e-3) continue;
    return q;
  }
}

// --- criteria ---------------------------------------------------------------------

void criterion_conversion_graph(Check& c) {
  oracle::RandomRotationStream rng(20240001);
  for (int i = 0; i < 100000; ++i) {
    const Quaternion q = sample_rotation(rng);
    check_all_targets(q, c);
    check_all_targets(quat_to_rotmat(q), c);
    check_all_targets(quat_to_euler_zyx(q), c);
    check_all_targets(quat_to_euler_zxy(q), c);
    check_all_targets(quat_to_tilt(q), c);
    check_all_targets(quat_to_fused(q), c);
    if (!c.passed) return;
  }
}

void criterion_pitch_roll_equalities(Check& c) {
  oracle::RandomRotationStream rng(20240002);
  for (int i = 0; i < 10000; ++i) {
    const Quaternion q = sample_rotation(rng);
    const RotationMatrix r = quat_to_rotmat(q);
    // Independent sides: Euler through the matrix, fused through the
    // quaternion, and vice versa for the ZXY pair.
    c.le(std::abs(rotmat_to_euler_zyx(r).pitch - quat_to_fused(q).pitch), 1e-12,
         "Euler ZYX pitch != fused pitch");
    c.le(std::abs(quat_to_euler_zxy(q).roll - rotmat_to_fused(r).roll), 1e-12,
         "Euler ZXY roll != fused roll");
    if (!c.passed) return;
  }
}

void criterion_sine_identity(Check& c) {
  oracle::RandomRotationStream rng(20240003);
  for (int i = 0; i < 10000; ++i) {
    const Quaternion q = sample_rotation(rng);
    const EulerZyx e = quat_to_euler_zyx(q);
    const double sa = std::sin(quat_to_tilt(q).angle);
    const double st = std::sin(e.pitch), sr = std::sin(e.roll);
    c.le(std::abs(sa * sa - (st * st + sr * sr - st * st * sr * sr)), 1e-12,
         "sin^2(alpha) identity residual");
    if (!c.passed) return;
  }
}

void criterion_yaw_additivity(Check& c) {
  oracle::RandomRotationStream rng(20240004);
  for (int i = 0; i < 10000; ++i) {
    const Quaternion q = rng.next(kPi - 1e-3);
    const double yaw_z = rng.uniform(-kPi, kPi);
    const double expected = wrap(fused_yaw(q).yaw + yaw_z);
    c.le(angle_dist(fused_yaw(apply_z_pre(q, yaw_z)).yaw, expected), 1e-10,
         "pre-multiplication yaw additivity");
    c.le(angle_dist(fused_yaw(apply_z_post(q, yaw_z)).yaw, expected), 1e-10,
         "post-multiplication yaw additivity");

    // Tilt rotation component untouched by a global z-rotation.
    const FusedAngles f = quat_to_fused(q);
    const FusedAngles f_rotated = quat_to_fused(apply_z_pre(q, yaw_z));
    c.le(std::abs(f_rotated.pitch - f.pitch), 1e-12, "fused pitch changed by pre z-rotation");
    c.le(std::abs(f_rotated.roll - f.roll), 1e-12, "fused roll changed by pre z-rotation");
    c.is_true(f_rotated.hemi == f.hemi, "hemisphere changed by pre z-rotation");
    const TiltAngles t = quat_to_tilt(q);
    const TiltAngles t_rotated = quat_to_tilt(apply_z_pre(q, yaw_z));
    c.le(angle_dist(t_rotated.axis_angle, t.axis_angle), 1e-12,
         "tilt axis angle changed by pre z-rotation");
    c.le(std::abs(t_rotated.angle - t.angle), 1e-12, "tilt angle changed by pre z-rotation");
    if (!c.passed) return;
  }
}

void criterion_inversion(Check& c) {
  oracle::RandomRotationStream rng(20240005);
  for (int i = 0; i < 10000; ++i) {
    const Quaternion q = rng.next(kPi - 1e-3);
    c.le(std::abs(wrap(fused_yaw(inverse(q)).yaw + fused_yaw(q).yaw)), 1e-10,
         "fused yaw negation through inversion");

    // Zero-yaw rotations: fused pitch and roll negate.
    const TiltAngles t(0.0, rng.uniform(-kPi, kPi), rng.uniform(0.0, kPi - 1e-3));
    const FusedAngles f = quat_to_fused(tilt_to_quat(t));
    const FusedAngles fi = inverse(f);
    c.le(std::abs(fi.yaw), 1e-10, "zero-yaw inverse yaw");
    c.le(std::abs(fi.pitch + f.pitch), 1e-10, "zero-yaw inverse pitch negation");
    c.le(std::abs(fi.roll + f.roll), 1e-10, "zero-yaw inverse roll negation");
    c.is_true(fi.hemi == f.hemi, "zero-yaw inverse hemisphere");

    const EulerZyx e = quat_to_euler_zyx(sample_rotation(rng));
    const EulerZyx ei = inverse(e);
    if (std::abs(ei.pitch) <= kHalfPi - 1e-3) {
      const EulerZyx oracle_inv = rotmat_to_euler_zyx(euler_zyx_to_rotmat(e).transposed());
      c.le(euler_zyx_dist(ei, oracle_inv), 1e-9, "Euler inverse vs transpose oracle");
    }
    if (!c.passed) return;
  }

  const EulerZyx worked = inverse(EulerZyx(0, 0.25 * kPi, kHalfPi));
  c.le(euler_zyx_dist(worked, {0.25 * kPi, 0.0, -kHalfPi}), 1e-12,
       "inverse of E(0, pi/4, pi/2)");
}

void criterion_counterexample(Check& c) {
  const RotationMatrix m = rotmat_z(-kHalfPi) * rotmat_x(0.75 * kPi) * rotmat_z(kHalfPi);
  const EulerZyx e = rotmat_to_euler_zyx(m);
  c.le(angle_dist(e.yaw, kPi), 1e-12, "counterexample Euler yaw");
  c.le(std::abs(e.pitch + 0.25 * kPi), 1e-12, "counterexample Euler pitch");
  c.le(angle_dist(e.roll, kPi), 1e-12, "counterexample Euler roll");
  c.le(std::abs(fused_yaw(m).yaw), 1e-12, "counterexample fused yaw");
}

void criterion_axisymmetry(Check& c) {
  oracle::RandomRotationStream rng(20240007);
  for (int rep = 0; rep < 32; ++rep) {
    const Quaternion base = rng.next(kPi - 1e-3);
    const AxisymScan scan = axisym_scan(base, 360);
    for (const auto& s : scan.samples) {
      const AxisymResiduals res = axisym_residuals(scan, s);
      c.le(res.yaw, 1e-10, "fused yaw not invariant under axis re-choice");
      c.le(res.tilt_angle, 1e-10, "tilt angle not invariant under axis re-choice");
      c.le(res.axis_angle, 1e-10, "tilt axis angle does not shift by -beta");
      c.le(res.quadrature, 1e-10, "sine-ratio quadrature identity");
      c.is_true(res.hemi_equal, "hemisphere not invariant under axis re-choice");
    }
    if (!c.passed) return;
  }

  // Euler witnesses on the fixed lower-hemisphere base rotation.
  const AxisymScan scan = axisym_scan(fused_to_quat({-1.2, 0.2, -1.3, -1}), 360);
  double yaw_diameter = 0.0, radius_min = 10.0, radius_max = 0.0;
  for (const auto& a : scan.samples) {
    radius_min = std::min(radius_min, std::hypot(a.sin_euler_roll, a.sin_euler_pitch));
    radius_max = std::max(radius_max, std::hypot(a.sin_euler_roll, a.sin_euler_pitch));
    for (const auto& b : scan.samples) {
      yaw_diameter = std::max(yaw_diameter, angle_dist(a.euler_zyx.yaw, b.euler_zyx.yaw));
    }
  }
  c.gt(yaw_diameter, 1.0, "Euler yaw range over beta");
  c.gt(radius_max - radius_min, 0.05, "Euler locus radius variation");
}

void criterion_level_sets(Check& c) {
  const double alphas[] = {kPi / 12, kPi / 6, kPi / 4, kPi / 3, 5 * kPi / 12};
  for (const auto& curve : level_sets(LevelSetRepr::fused, alphas, 360)) {
    const double radius = std::sin(curve.tilt_angle);
    for (const auto& p : curve.points) {
      c.le(std::abs(std::hypot(p.sin_roll, p.sin_pitch) - radius), 1e-12,
           "fused level set radius error");
    }
  }

  const double euler_alpha[] = {kPi / 3};
  double worst = 0.0;
  for (const auto& curve : level_sets(LevelSetRepr::euler, euler_alpha, 360)) {
    for (const auto& p : curve.points) {
      worst = std::max(worst,
                       std::abs(std::hypot(p.sin_roll, p.sin_pitch) - std::sin(kPi / 3)));
    }
  }
  c.gt(worst, 0.01, "Euler level set circularity deviation");
}

void criterion_sensitivity(Check& c) {
  double prev_yaw = 0.0, prev_roll = 0.0;
  for (double margin : {1e-2, 1e-3, 1e-4}) {
    const SensitivityProbe p = euler_sensitivity_probe(kHalfPi - margin, kHalfPi, margin / 10.0);
    c.gt(p.slope_euler_yaw, prev_yaw, "Euler yaw slope not monotone in shrinking margin");
    c.gt(p.slope_euler_roll, prev_roll, "Euler roll slope not monotone in shrinking margin");
    c.le(p.slope_fused_yaw, 0.0, "fused yaw slope non-zero on tilt family");
    c.le(p.slope_fused_pitch_ratio, 1.0 + 1e-9, "fused pitch ratio slope above bound");
    c.le(p.slope_fused_roll_ratio, 1.0 + 1e-9, "fused roll ratio slope above bound");
    prev_yaw = p.slope_euler_yaw;
    prev_roll = p.slope_euler_roll;
  }
}

// --- criterion 10: CLI determinism and golden files -------------------------------

int run_cli(const std::string& cli, const std::string& args, const std::string& stdout_path) {
  const std::string cmd = "'" + cli + "' " + args + " > '" + stdout_path + "' 2> /dev/null";
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void criterion_cli(Check& c) {
  const char* cli = std::getenv("ROTKIT_CLI");
  const char* golden = std::getenv("ROTKIT_GOLDEN_DIR");
#ifdef ROTKIT_DEFAULT_CLI
  if (!cli) cli = ROTKIT_DEFAULT_CLI;
#endif
#ifdef ROTKIT_DEFAULT_GOLDEN_DIR
  if (!golden) golden = ROTKIT_DEFAULT_GOLDEN_DIR;
#endif
  c.is_true(cli != nullptr && golden != nullptr, "ROTKIT_CLI / ROTKIT_GOLDEN_DIR not set");
  if (!c.passed) return;
  c.is_true(std::filesystem::exists(cli), "CLI binary not found");
  if (!c.passed) return;

  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path() / ("rotkit_accept_" + std::to_string(getpid()));
  fs::create_directories(tmp);

  // Golden scenario 1: identity conversion.
  const fs::path out1 = tmp / "convert_identity.txt";
  c.is_true(run_cli(cli, "convert --from fused 0 0 0 1 --to quat", out1.string()) == 0,
            "identity convert exit code");
  c.is_true(slurp(out1) == slurp(fs::path(golden) / "convert_identity.txt"),
            "identity convert golden mismatch");

  // Golden scenario 2: axisym scan of Rx(3pi/4).
  const std::string rx_args =
      "axisym --base euler-zyx 0 0 2.356194490192345 --n-beta 8";
  const fs::path out2a = tmp / "axisym_rx135_a.csv", out2b = tmp / "axisym_rx135_b.csv";
  c.is_true(run_cli(cli, rx_args + " -o '" + out2a.string() + "'", (tmp / "e2a").string()) == 0,
            "axisym rx135 exit code");
  c.is_true(run_cli(cli, rx_args + " -o '" + out2b.string() + "'", (tmp / "e2b").string()) == 0,
            "axisym rx135 repeat exit code");
  c.is_true(!slurp(out2a).empty() && slurp(out2a) == slurp(out2b),
            "axisym rx135 not byte-identical across runs");
  c.is_true(slurp(out2a) == slurp(fs::path(golden) / "axisym_rx135.csv"),
            "axisym rx135 golden mismatch");

  // Golden scenario 3: axisym scan of a lower-hemisphere base rotation.
  const std::string base_args = "axisym --base fused -1.2 0.2 -1.3 -1 --n-beta 12";
  const fs::path out3 = tmp / "axisym_fused_base.csv";
  c.is_true(run_cli(cli, base_args + " -o '" + out3.string() + "'", (tmp / "e3").string()) == 0,
            "axisym fused base exit code");
  c.is_true(slurp(out3) == slurp(fs::path(golden) / "axisym_fused_base.csv"),
            "axisym fused base golden mismatch");

  // tilt-sweep determinism with a fixed config.
  const std::string sweep_args = "tilt-sweep --alpha-max 2.9 --n-radial 24 --n-angular 64";
  const fs::path out4a = tmp / "sweep_a.csv", out4b = tmp / "sweep_b.csv";
  c.is_true(run_cli(cli, sweep_args + " -o '" + out4a.string() + "'", (tmp / "e4a").string()) == 0,
            "tilt-sweep exit code");
  c.is_true(run_cli(cli, sweep_args + " -o '" + out4b.string() + "'", (tmp / "e4b").string()) == 0,
            "tilt-sweep repeat exit code");
  c.is_true(!slurp(out4a).empty() && slurp(out4a) == slurp(out4b),
            "tilt-sweep not byte-identical across runs");

  std::error_code ec;
  fs::remove_all(tmp, ec);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<void(Check&)> run;
  };

  const std::vector<Criterion> criteria = {
      {1, "conversion-graph consistency, hub within 1e-9 and oracle within 1e-8, 1e5 rotations",
       criterion_conversion_graph},
      {2, "Euler/fused pitch and roll equalities within 1e-12 on independent paths",
       criterion_pitch_roll_equalities},
      {3, "sin^2(alpha) identity residual within 1e-12", criterion_sine_identity},
      {4, "fused yaw additivity within 1e-10 and tilt invariance within 1e-12 under z-rotations",
       criterion_yaw_additivity},
      {5, "inversion: yaw negation 1e-10, zero-yaw negation 1e-10, Euler inverse 1e-9",
       criterion_inversion},
      {6, "conjugated x-rotation counterexample reproduced within 1e-12",
       criterion_counterexample},
      {7, "axisymmetry suite: 32 bases x 360 beta within 1e-10, Euler witnesses",
       criterion_axisymmetry},
      {8, "level sets: fused circles within 1e-12, Euler deviation above 0.01",
       criterion_level_sets},
      {9, "sensitivity divergence towards gimbal lock, fused slopes bounded",
       criterion_sensitivity},
      {10, "CLI determinism and golden-file regression", criterion_cli},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail = std::string("exception: ") + e.what();
    }
    if (check.passed) {
      std::printf("PASS  criterion %2d: %s\n", criterion.id, criterion.label);
    } else {
      ++failures;
      std::printf("FAIL  criterion %2d: %s — %s\n", criterion.id, criterion.label,
                  check.detail.c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
