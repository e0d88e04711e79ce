#include "radiuslab/error.hpp"

namespace radiuslab {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::UndefinedAtZero: return "UndefinedAtZero";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::NonPositiveLambda: return "NonPositiveLambda";
    case ErrorCode::DuplicateLambda: return "DuplicateLambda";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::AllZeroSpectrum: return "AllZeroSpectrum";
    case ErrorCode::MissingDerivativeAtZero: return "MissingDerivativeAtZero";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace radiuslab
