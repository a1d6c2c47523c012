#include "toric/error.hpp"

namespace toric {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AxisViolation: return "AxisViolation";
    case ErrorKind::NotStarShaped: return "NotStarShaped";
    case ErrorKind::SelfIntersection: return "SelfIntersection";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorKind::SmoothingBreaksStarShape: return "SmoothingBreaksStarShape";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::OracleCutoffInsufficient: return "OracleCutoffInsufficient";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::BadThresholds: return "BadThresholds";
    case ErrorKind::RayMissesBoundary: return "RayMissesBoundary";
    case ErrorKind::EpsTooLarge: return "EpsTooLarge";
    case ErrorKind::ClippingBreaksStarShape: return "ClippingBreaksStarShape";
    case ErrorKind::EpsTooLargeForNeighborhood: return "EpsTooLargeForNeighborhood";
    case ErrorKind::ValidityConditionFails: return "ValidityConditionFails";
    case ErrorKind::NotFlattened: return "NotFlattened";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace toric
