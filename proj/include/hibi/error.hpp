#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hibi {

enum class ErrorCode {
  kParseError,
  kInvalidInput,
  kMissingOrigin,
  kNotMeetClosed,
  kNotJoinClosed,
  kChainConditionFails,
  kInvalidPoset,
  kWidthExceedsTwo,
  kInvalidWindow,
  kRankTooSmall,
  kPreconditionFailed,
  kNotConvex,
  kDisconnected,
  kDegreeInfeasible,
  kBudgetExceeded,
  kCapExceeded,
  kOracleInconsistency,
  kDisagreement,
};

/// Stable machine-readable name, used in CLI error output.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hibi
