// Domain validation for all rotation value types. Violations are reported
// as data, not exceptions: callers decide what to do with them.
#pragma once

#include <string>
#include <vector>

#include "rotkit/types.hpp"

namespace rotkit {

struct ValidationIssue {
  std::string message;
  double residual = 0.0;  // measured amount by which the invariant is violated
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  std::string summary() const;  // "valid" or the joined issue messages
};

ValidationReport validate(const Quaternion& q);
ValidationReport validate(const RotationMatrix& r);
ValidationReport validate(const EulerZyx& e);
ValidationReport validate(const EulerZxy& e);
ValidationReport validate(const TiltAngles& t);
ValidationReport validate(const FusedAngles& f);

}  // namespace rotkit
