#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace puiseux {

enum class ErrorCode {
  kInvalidArgument,     // rejected input
  kNotAMember,
  kUndefinedValuation,
  kBudgetExceeded,
  kNeedsBound,
  kUnboundIdentifier,
  kKindMismatch,
  kSyntax,
  kInternal,            // a checked invariant failed
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace puiseux
