#pragma once

#include <stdexcept>
#include <string>

namespace css {

enum class ErrorCode {
  InvalidArgument,
  LengthMismatch,
  GridKindMismatch,
  PlanMismatch,
  IntegrationDiverged,
  NonuniformSampling,
  WrongCoupling,
  NoSignChange,
  Nonconvergence,
  BracketNotFound,
  UndecidedDominated,
  BadMagic,
  VersionMismatch,
  TruncatedPayload,
  UnknownKey,
  TypeError,
  MissingRequired,
  IoError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace css
