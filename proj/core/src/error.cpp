#include "puiseux/error.hpp"

namespace puiseux {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kNotAMember: return "not-a-member";
    case ErrorCode::kUndefinedValuation: return "undefined-valuation";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
    case ErrorCode::kNeedsBound: return "needs-bound";
    case ErrorCode::kUnboundIdentifier: return "unbound-identifier";
    case ErrorCode::kKindMismatch: return "kind-mismatch";
    case ErrorCode::kSyntax: return "syntax-error";
    case ErrorCode::kInternal: return "internal-invariant";
  }
  return "unknown";
}

}  // namespace puiseux
