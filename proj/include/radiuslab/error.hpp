#pragma once

#include <stdexcept>
#include <string>

namespace radiuslab {

enum class ErrorCode {
  InvalidArgument = 1,
  DimensionMismatch,
  NotHermitian,
  NotPSD,
  NoConvergence,
  UndefinedAtZero,
  ZeroEntry,
  NonPositiveLambda,
  DuplicateLambda,
  DomainError,
  AllZeroSpectrum,
  MissingDerivativeAtZero,
  ParameterOutOfRange,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace radiuslab
