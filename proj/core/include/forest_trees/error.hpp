#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace forest_trees {

enum class ErrorKind {
  InvalidHost,
  EdgeOutOfRange,
  SamePartEdge,
  DuplicateEdge,
  CycleDetected,
  HostTooLarge,
  InfeasibleTarget,
  InvalidProfile,
  ProfileSumMismatch,
  DivisibilityViolation,
  SingularPoint,
  OrderSumMismatch,
  MatchingTooLarge,
  ShapeOutOfRange,
  InvalidWeights,
  TooLarge,
  NonIntegerWeights,
  IndexOutOfRange,
  GuardViolated,
  SamplingExhausted,
  DegenerateDenominator,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The message names the offending
/// edge, index or guard; `kind()` is stable and meant for dispatch.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for assertion failures that indicate a bug in this library rather
  /// than bad input.
  bool internal() const noexcept { return kind_ == ErrorKind::DivisibilityViolation; }

 private:
  ErrorKind kind_;
};

}  // namespace forest_trees
