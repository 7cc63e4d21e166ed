#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reeb {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NonpositiveMeanIndex,
  EmptyWindow,
  InconsistentFamily,
  NotUnimodular,
  ZeroB,
  NonintegralN,
  ZeroSign,
  OddDWithHNot1,
  InvalidDegree,
  PreconditionViolated,
  BadCongruence,
  OddN,
  NotLacunary,
  WindowMismatch,
  DirectionMismatch,
  CertInvalid,
  UnknownDegreeTouched,
  SequencesDiffer,
  BadDirection,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace reeb
