#include "forest_trees/error.hpp"

namespace forest_trees {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidHost: return "InvalidHost";
    case ErrorKind::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorKind::SamePartEdge: return "SamePartEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::HostTooLarge: return "HostTooLarge";
    case ErrorKind::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::ProfileSumMismatch: return "ProfileSumMismatch";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::OrderSumMismatch: return "OrderSumMismatch";
    case ErrorKind::MatchingTooLarge: return "MatchingTooLarge";
    case ErrorKind::ShapeOutOfRange: return "ShapeOutOfRange";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NonIntegerWeights: return "NonIntegerWeights";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::GuardViolated: return "GuardViolated";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace forest_trees
