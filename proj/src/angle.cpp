#include "rotkit/angle.hpp"

#include <cmath>
#include <stdexcept>

namespace rotkit {

double wrap(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("wrap: non-finite angle");
  angle = std::fmod(angle, kTwoPi);
  if (angle > kPi) {
    angle -= kTwoPi;
  } else if (angle <= -kPi) {
    angle += kTwoPi;
  }
  return angle;
}

double angle_dist(double a, double b) { return std::abs(wrap(a - b)); }

namespace {

double clamp_unit(double v, const char* what) {
  if (v > 1.0) {
    if (v > 1.0 + 1e-9) throw std::logic_error(std::string(what) + ": argument out of range");
    return 1.0;
  }
  if (v < -1.0) {
    if (v < -1.0 - 1e-9) throw std::logic_error(std::string(what) + ": argument out of range");
    return -1.0;
  }
  return v;
}

}  // namespace

double safe_asin(double v) { return std::asin(clamp_unit(v, "safe_asin")); }
double safe_acos(double v) { return std::acos(clamp_unit(v, "safe_acos")); }

}  // namespace rotkit
