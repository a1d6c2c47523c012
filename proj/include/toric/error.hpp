#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorKind {
  AxisViolation,
  NotStarShaped,
  SelfIntersection,
  TooFewVertices,
  ParamOutOfRange,
  RadiusTooLarge,
  SmoothingBreaksStarShape,
  DegenerateDenominator,
  OracleCutoffInsufficient,
  StepTooLarge,
  NotMonotone,
  BadThresholds,
  RayMissesBoundary,
  EpsTooLarge,
  ClippingBreaksStarShape,
  EpsTooLargeForNeighborhood,
  ValidityConditionFails,
  NotFlattened,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind);

// Every failure in the library is reported through this type. `index` is the
// offending vertex/segment when one exists, otherwise -1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int index = -1)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  int index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  int index_;
};

}  // namespace toric
