#pragma once

#include <stdexcept>
#include <string>

namespace grank {

enum class ErrorCode {
  ParseError,
  IndexOutOfRange,
  DuplicateEntry,
  DimensionMismatch,
  SingularMatrix,
  UnknownName,
  BadParams,
  BudgetExceeded,
  InsufficientPrimes,
  PreconditionFailed,
  NotApplicable,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace grank
