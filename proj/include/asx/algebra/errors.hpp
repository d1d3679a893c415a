#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asx {

enum class ErrorKind {
  DivisionByZero,
  SingularMatrix,
  MixedScalars,
  UnsupportedAlgebraicDegree,
  RepeatedEigenvalue,
  InconsistentEigenmatrices,
  TooManyClasses,
  WellDefinednessViolation,
  InvalidPartition,
  DegenerateParameter,
  ConsistencyFailure,
  StepFailure,
  VerificationFailure,
  UnknownName,
  InvalidParameter,
  NotAScheme,
  NotPPolynomial,
  ParseError,
  ZeroDenominator,
  InvariantViolation,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace asx
