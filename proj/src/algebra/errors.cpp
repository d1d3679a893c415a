#include "asx/algebra/errors.hpp"

namespace asx {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::MixedScalars: return "MixedScalars";
    case ErrorKind::UnsupportedAlgebraicDegree: return "UnsupportedAlgebraicDegree";
    case ErrorKind::RepeatedEigenvalue: return "RepeatedEigenvalue";
    case ErrorKind::InconsistentEigenmatrices: return "InconsistentEigenmatrices";
    case ErrorKind::TooManyClasses: return "TooManyClasses";
    case ErrorKind::WellDefinednessViolation: return "WellDefinednessViolation";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::StepFailure: return "StepFailure";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotAScheme: return "NotAScheme";
    case ErrorKind::NotPPolynomial: return "NotPPolynomial";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace asx
