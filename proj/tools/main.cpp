// rotkit command-line front end: one-shot conversions between rotation
// representations, experiment scans, and CSV/JSON emission of the figure
// datasets.
//
// Exit codes: 0 ok, 2 usage or domain error, 3 singular input, 4 I/O error.
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotkit/analysis.hpp"
#include "rotkit/convert.hpp"
#include "rotkit/ops.hpp"
#include "rotkit/oracle.hpp"
#include "rotkit/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSingular = 3;
constexpr int kExitIo = 4;

constexpr double kDegToRad = rotkit::kPi / 180.0;

// All numeric output is formatted to 12 significant digits with to_chars,
// which is locale independent.
std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string fmt(int v) { return std::to_string(v); }

enum class Repr { quat, rotmat, euler_zyx, euler_zxy, tilt, fused };

const std::map<std::string, Repr> kReprNames = {
    {"quat", Repr::quat},           {"rotmat", Repr::rotmat}, {"euler-zyx", Repr::euler_zyx},
    {"euler-zxy", Repr::euler_zxy}, {"tilt", Repr::tilt},     {"fused", Repr::fused}};

std::size_t value_count(Repr r) {
  switch (r) {
    case Repr::quat: return 4;
    case Repr::rotmat: return 9;
    case Repr::fused: return 4;
    default: return 3;
  }
}

struct ParsedRotation {
  rotkit::Quaternion quat;  // hub value
};

double parse_double(const std::string& token) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number '" + token + "'");
  }
}

// Parses representation values (angles optionally in degrees) and converts
// to the quaternion hub, validating the domain on the way.
ParsedRotation ingest(Repr repr, const std::vector<std::string>& tokens, bool degrees) {
  if (tokens.size() != value_count(repr)) {
    throw std::invalid_argument("expected " + std::to_string(value_count(repr)) +
                                " values for this representation, got " +
                                std::to_string(tokens.size()));
  }
  std::vector<double> v;
  v.reserve(tokens.size());
  for (const auto& t : tokens) v.push_back(parse_double(t));
  const double scale = degrees ? kDegToRad : 1.0;

  ParsedRotation out;
  switch (repr) {
    case Repr::quat: {
      const rotkit::Quaternion q(v[0], v[1], v[2], v[3]);
      if (auto rep = rotkit::validate(q); !rep.ok()) throw std::invalid_argument(rep.summary());
      out.quat = q;
      break;
    }
    case Repr::rotmat: {
      const rotkit::RotationMatrix r(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]);
      if (auto rep = rotkit::validate(r); !rep.ok()) throw std::invalid_argument(rep.summary());
      out.quat = rotkit::rotmat_to_quat(r);
      break;
    }
    case Repr::euler_zyx: {
      const rotkit::EulerZyx e(v[0] * scale, v[1] * scale, v[2] * scale);
      if (auto rep = rotkit::validate(e); !rep.ok()) throw std::invalid_argument(rep.summary());
      out.quat = rotkit::euler_zyx_to_quat(e);
      break;
    }
    case Repr::euler_zxy: {
      const rotkit::EulerZxy e(v[0] * scale, v[1] * scale, v[2] * scale);
      if (auto rep = rotkit::validate(e); !rep.ok()) throw std::invalid_argument(rep.summary());
      out.quat = rotkit::euler_zxy_to_quat(e);
      break;
    }
    case Repr::tilt: {
      const rotkit::TiltAngles t(v[0] * scale, v[1] * scale, v[2] * scale);
      if (auto rep = rotkit::validate(t); !rep.ok()) throw std::invalid_argument(rep.summary());
      out.quat = rotkit::tilt_to_quat(t);
      break;
    }
    case Repr::fused: {
      if (v[3] != 1.0 && v[3] != -1.0) {
        throw std::invalid_argument("fused hemisphere must be the literal -1 or 1");
      }
      const rotkit::FusedAngles f(v[0] * scale, v[1] * scale, v[2] * scale,
                                  static_cast<int>(v[3]));
      if (auto rep = rotkit::validate(f); !rep.ok()) throw std::invalid_argument(rep.summary());
      out.quat = rotkit::fused_to_quat(f);
      break;
    }
  }
  return out;
}

std::vector<std::string> emit(Repr repr, const rotkit::Quaternion& q, bool* singular) {
  switch (repr) {
    case Repr::quat:
      return {fmt(q.w), fmt(q.x), fmt(q.y), fmt(q.z)};
    case Repr::rotmat: {
      const rotkit::RotationMatrix r = rotkit::quat_to_rotmat(q);
      std::vector<std::string> out;
      for (double v : r.m) out.push_back(fmt(v));
      return out;
    }
    case Repr::euler_zyx: {
      const rotkit::EulerZyx e = rotkit::quat_to_euler_zyx(q);
      return {fmt(e.yaw), fmt(e.pitch), fmt(e.roll)};
    }
    case Repr::euler_zxy: {
      const rotkit::EulerZxy e = rotkit::quat_to_euler_zxy(q);
      return {fmt(e.yaw), fmt(e.roll), fmt(e.pitch)};
    }
    case Repr::tilt: {
      const rotkit::TiltAngles t = rotkit::quat_to_tilt(q, singular);
      return {fmt(t.yaw), fmt(t.axis_angle), fmt(t.angle)};
    }
    case Repr::fused: {
      const rotkit::FusedAngles f = rotkit::quat_to_fused(q, singular);
      return {fmt(f.yaw), fmt(f.pitch), fmt(f.roll), fmt(f.hemi)};
    }
  }
  return {};
}

// --- tabular output -------------------------------------------------------------

struct Table {
  std::vector<std::string> columns;
  std::vector<bool> text;  // text columns are quoted in JSON
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) os << ',';
    os << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i];
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t) {
  os << "[\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << "  {";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i) os << ", ";
      os << '"' << t.columns[i] << "\": ";
      if (t.text[i]) {
        os << '"' << t.rows[r][i] << '"';
      } else {
        os << t.rows[r][i];
      }
    }
    os << '}' << (r + 1 < t.rows.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

// Resolves the output target. A relative path is placed under ROTKIT_OUT_DIR
// when that is set; "-" or an empty path means stdout.
int write_table(const Table& t, const std::string& path, const std::string& format) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!path.empty() && path != "-") {
    std::filesystem::path p(path);
    if (const char* dir = std::getenv("ROTKIT_OUT_DIR"); dir && *dir && p.is_relative()) {
      p = std::filesystem::path(dir) / p;
    }
    file.open(p, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open output file " << p.string() << "\n";
      return kExitIo;
    }
    os = &file;
  }
  if (format == "json") {
    write_json(*os, t);
  } else {
    write_csv(*os, t);
  }
  os->flush();
  if (!*os) {
    std::cerr << "error: failed writing output\n";
    return kExitIo;
  }
  return kExitOk;
}

// --- commands ---------------------------------------------------------------------

struct ConvertArgs {
  std::string from, to;
  std::vector<std::string> values;
};

int run_convert(const ConvertArgs& args, bool degrees) {
  const Repr from = kReprNames.at(args.from);
  const Repr to = kReprNames.at(args.to);
  const ParsedRotation in = ingest(from, args.values, degrees);
  bool out_singular = false;
  const std::vector<std::string> fields = emit(to, in.quat, &out_singular);
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ' ';
    line += fields[i];
  }
  std::cout << line << "\n";
  if (out_singular) {
    std::cerr << "warning: rotation is at the fused yaw singularity; "
                 "fused yaw reported as the canonical 0\n";
    return kExitSingular;
  }
  return kExitOk;
}

int run_tilt_sweep(double alpha_max, int n_radial, int n_angular, const std::string& out,
                   const std::string& format) {
  const auto samples = rotkit::tilt_sweep(alpha_max, n_radial, n_angular);
  Table t;
  t.columns = {"x",          "y",           "gamma",      "alpha",   "fused_psi", "fused_theta",
               "fused_phi",  "fused_h",     "euler_psi",  "euler_theta", "euler_phi"};
  t.text.assign(t.columns.size(), false);
  for (const auto& s : samples) {
    t.rows.push_back({fmt(s.x), fmt(s.y), fmt(s.axis_angle), fmt(s.tilt_angle), fmt(s.fused.yaw),
                      fmt(s.fused.pitch), fmt(s.fused.roll), fmt(s.fused.hemi), fmt(s.euler.yaw),
                      fmt(s.euler.pitch), fmt(s.euler.roll)});
  }
  return write_table(t, out, format);
}

int run_axisym(const rotkit::Quaternion& base, int n_beta, const std::string& out,
               const std::string& format) {
  const rotkit::AxisymScan scan = rotkit::axisym_scan(base, n_beta);
  Table t;
  t.columns = {"beta",  "fused_psi", "sin_fused_phi", "sin_fused_theta", "gamma",
               "alpha", "h",         "euler_psi",     "sin_euler_phi",   "sin_euler_theta"};
  t.text.assign(t.columns.size(), false);
  for (const auto& s : scan.samples) {
    t.rows.push_back({fmt(s.beta), fmt(s.fused.yaw), fmt(s.sin_fused_roll),
                      fmt(s.sin_fused_pitch), fmt(s.tilt.axis_angle), fmt(s.tilt.angle),
                      fmt(s.fused.hemi), fmt(s.euler_zyx.yaw), fmt(s.sin_euler_roll),
                      fmt(s.sin_euler_pitch)});
  }
  return write_table(t, out, format);
}

int run_levels(const std::string& repr, const std::vector<double>& alphas, int n_gamma,
               const std::string& out, const std::string& format) {
  std::vector<rotkit::LevelSetCurve> curves;
  if (repr == "fused" || repr == "both") {
    auto c = rotkit::level_sets(rotkit::LevelSetRepr::fused, alphas, n_gamma);
    curves.insert(curves.end(), c.begin(), c.end());
  }
  if (repr == "euler" || repr == "both") {
    auto c = rotkit::level_sets(rotkit::LevelSetRepr::euler, alphas, n_gamma);
    curves.insert(curves.end(), c.begin(), c.end());
  }
  Table t;
  t.columns = {"alpha", "gamma", "sin_phi", "sin_theta", "repr"};
  t.text = {false, false, false, false, true};
  for (const auto& curve : curves) {
    const char* name = curve.repr == rotkit::LevelSetRepr::fused ? "fused" : "euler";
    for (const auto& p : curve.points) {
      t.rows.push_back(
          {fmt(curve.tilt_angle), fmt(p.axis_angle), fmt(p.sin_roll), fmt(p.sin_pitch), name});
    }
  }
  return write_table(t, out, format);
}

int run_probe(const std::vector<double>& alphas, const std::vector<double>& margins,
              double gamma_center, double delta, const std::string& out,
              const std::string& format) {
  Table t;
  t.columns = {"alpha",           "gamma_center",    "margin",           "slope_euler_psi",
               "slope_euler_phi", "slope_fused_theta", "slope_fused_phi"};
  t.text.assign(t.columns.size(), false);

  bool any_gimbal = false;
  auto add_row = [&](double alpha, double margin) {
    // Keep the finite-difference stencil well inside the gimbal margin.
    const double d = std::min(delta, std::max(std::abs(margin) / 10.0, 1e-9));
    const rotkit::SensitivityProbe p = rotkit::euler_sensitivity_probe(alpha, gamma_center, d);
    any_gimbal = any_gimbal || p.near_gimbal;
    t.rows.push_back({fmt(alpha), fmt(gamma_center), fmt(margin), fmt(p.slope_euler_yaw),
                      fmt(p.slope_euler_roll), fmt(p.slope_fused_pitch_ratio),
                      fmt(p.slope_fused_roll_ratio)});
  };
  for (double alpha : alphas) add_row(alpha, rotkit::kHalfPi - alpha);
  for (double margin : margins) {
    if (!(margin > 0.0 && margin < rotkit::kHalfPi)) {
      throw std::invalid_argument("probe: margins must be in (0, pi/2)");
    }
    add_row(rotkit::kHalfPi - margin, margin);
  }

  const int rc = write_table(t, out, format);
  if (rc != kExitOk) return rc;
  if (any_gimbal) {
    std::cerr << "warning: finite-difference stencil touched the gimbal lock region\n";
    return kExitSingular;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotation representation toolkit: conversions between "
               "quaternion/rotation-matrix/Euler/tilt/fused parameterisations and "
               "comparative experiment datasets"};
  app.require_subcommand(1);
  bool degrees = false;
  app.add_flag("--degrees", degrees, "interpret angle inputs as degrees");

  ConvertArgs conv_args;
  auto* conv = app.add_subcommand("convert", "convert one rotation between representations");
  conv->add_option("--from", conv_args.from, "source representation")
      ->required()
      ->check(CLI::IsMember({"quat", "rotmat", "euler-zyx", "euler-zxy", "tilt", "fused"}));
  conv->add_option("--to", conv_args.to, "target representation")
      ->required()
      ->check(CLI::IsMember({"quat", "rotmat", "euler-zyx", "euler-zxy", "tilt", "fused"}));
  conv->add_option("values", conv_args.values, "source representation values")->required();

  std::string out_path;
  std::string format = "csv";
  double alpha_max = 0.95 * rotkit::kPi;
  int n_radial = 96, n_angular = 256;
  auto* sweep = app.add_subcommand("tilt-sweep", "fused/Euler parameters over a pure tilt grid");
  sweep->add_option("--alpha-max", alpha_max, "largest tilt angle in the sweep");
  sweep->add_option("--n-radial", n_radial, "number of tilt angle steps");
  sweep->add_option("--n-angular", n_angular, "number of tilt axis angle steps");

  std::string base_repr = "fused";
  std::vector<std::string> base_values;
  bool random_base = false;
  std::uint64_t seed = 0;
  int n_beta = 360;
  auto* axisym = app.add_subcommand(
      "axisym", "parameters of Rz(-beta) R0 Rz(beta) as the axis choice beta varies");
  axisym->add_option("--base", base_repr, "base rotation representation")
      ->check(CLI::IsMember({"quat", "rotmat", "euler-zyx", "euler-zxy", "tilt", "fused"}));
  axisym->add_option("values", base_values, "base rotation values");
  axisym->add_flag("--random", random_base, "use a seeded random non-singular base rotation");
  axisym->add_option("--seed", seed, "seed for --random");
  axisym->add_option("--n-beta", n_beta, "number of beta grid points");

  std::string levels_repr = "fused";
  std::vector<double> levels_alphas = {rotkit::kPi / 12, rotkit::kPi / 6, rotkit::kPi / 4,
                                       rotkit::kPi / 3, 5 * rotkit::kPi / 12};
  int n_gamma = 360;
  auto* levels = app.add_subcommand("levels", "level sets of constant sin(alpha) in sine-ratio space");
  levels->add_option("--repr", levels_repr, "fused, euler or both")
      ->check(CLI::IsMember({"fused", "euler", "both"}));
  levels->add_option("--alphas", levels_alphas, "contour levels (tilt angles)")->delimiter(',');
  levels->add_option("--n-gamma", n_gamma, "points per contour");

  std::vector<double> probe_alphas = {65.0 * kDegToRad};
  std::vector<double> probe_margins = {1e-2, 1e-3, 1e-4};
  double gamma_center = rotkit::kHalfPi;
  double delta = 0.01;
  auto* probe = app.add_subcommand(
      "probe", "finite-difference parameter sensitivities of the pure tilt family");
  probe->add_option("--alphas", probe_alphas, "explicit tilt angles to probe")->delimiter(',');
  probe->add_option("--margins", probe_margins, "gimbal-lock margins pi/2 - alpha to probe")
      ->delimiter(',');
  probe->add_option("--gamma-center", gamma_center, "tilt axis angle at the stencil centre");
  probe->add_option("--delta", delta, "half-width of the finite-difference stencil");

  for (auto* cmd : {sweep, axisym, levels, probe}) {
    cmd->add_option("-o,--output", out_path, "output path ('-' or absent: stdout)");
    cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }
  // Lets the global --degrees flag appear after the subcommand name too.
  for (auto* cmd : {conv, sweep, axisym, levels, probe}) cmd->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (conv->parsed()) return run_convert(conv_args, degrees);

    const double scale = degrees ? kDegToRad : 1.0;
    if (sweep->parsed()) {
      return run_tilt_sweep(alpha_max * scale, n_radial, n_angular, out_path, format);
    }
    if (axisym->parsed()) {
      rotkit::Quaternion base;
      if (random_base) {
        // Keep clear of the fused yaw singularity so the scan is well posed.
        base = rotkit::oracle::random_rotations(seed, 1, rotkit::kPi - 1e-3).front();
      } else {
        if (base_values.empty()) {
          throw std::invalid_argument("axisym: provide --base values or --random");
        }
        base = ingest(kReprNames.at(base_repr), base_values, degrees).quat;
      }
      return run_axisym(base, n_beta, out_path, format);
    }
    if (levels->parsed()) {
      for (double& a : levels_alphas) a *= scale;
      return run_levels(levels_repr, levels_alphas, n_gamma, out_path, format);
    }
    if (probe->parsed()) {
      for (double& a : probe_alphas) a *= scale;
      return run_probe(probe_alphas, probe_margins, gamma_center * scale, delta, out_path,
                       format);
    }
  } catch (const rotkit::SingularError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitSingular;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
