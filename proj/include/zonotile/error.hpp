#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zonotile {

enum class ErrorCode {
  DivisionByZero,
  EmptyGenerators,
  ZeroSegment,
  NotFullDimensional,
  IndexOutOfRange,
  DegeneratePolygon,
  NotConvex,
  NotCentrallySymmetric,
  NonPositiveHeight,
  ParameterOutOfRange,
  ClosureViolated,
  NonConvexResult,
  SingularBasis,
  NonGenericSample,
  EmptyIntersection,
  SyntaxError,
  SchemaError,
  InvariantViolation,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zonotile
