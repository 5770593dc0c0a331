// Independent verification path used by the test suites, plus seeded random
// rotation generation.
//
// Every conversion here is reconstructed from the geometric definitions of
// the parameters (explicit frame vectors, shortest-arc alignments, elemental
// rotation products) and deliberately shares none of the closed-form
// extraction formulas in convert.cpp. Disagreement between the two paths is
// a bug in the main library, not here. Accuracy is favoured over speed.
#pragma once

#include <cstdint>
#include <vector>

#include "rotkit/types.hpp"

namespace rotkit::oracle {

// Deterministic random rotation source. The generator is SplitMix64 driving
// a Box-Muller transform; quaternions are normalised 4D standard-normal
// samples, which are uniform on the rotation group, rejection-filtered to
// tilt angle alpha <= alpha_cap. Identical seeds give identical sequences.
class RandomRotationStream {
 public:
  explicit RandomRotationStream(std::uint64_t seed) : state_(seed) {}

  Quaternion next(double alpha_cap = kPi);
  double uniform(double lo, double hi);
  double normal();

  // Independent stream derived from this one's seed and the given id.
  RandomRotationStream substream(std::uint64_t id) const;

 private:
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

std::vector<Quaternion> random_rotations(std::uint64_t seed, int count, double alpha_cap = kPi);

// Rotation construction from parameters, by explicit elemental rotation
// products and shortest-arc alignment of the definitional frame vectors.
Quaternion quat_from_euler_zyx(const EulerZyx& e);
Quaternion quat_from_euler_zxy(const EulerZxy& e);
Quaternion quat_from_tilt(const TiltAngles& t);
Quaternion quat_from_fused(const FusedAngles& f);
Quaternion quat_from_rotmat(const RotationMatrix& r);
RotationMatrix rotmat_from_quat(const Quaternion& q);

// Parameter extraction from the frame geometry. Inputs closer than 1e-6 (in
// parameter terms) to the relevant singularity are refused with
// std::domain_error.
TiltAngles tilt_from_quat(const Quaternion& q);
FusedAngles fused_from_quat(const Quaternion& q);
EulerZyx euler_zyx_from_quat(const Quaternion& q);
EulerZxy euler_zxy_from_quat(const Quaternion& q);

}  // namespace rotkit::oracle
