#include "hibi/error.hpp"

namespace hibi {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kMissingOrigin: return "MissingOrigin";
    case ErrorCode::kNotMeetClosed: return "NotMeetClosed";
    case ErrorCode::kNotJoinClosed: return "NotJoinClosed";
    case ErrorCode::kChainConditionFails: return "ChainConditionFails";
    case ErrorCode::kInvalidPoset: return "InvalidPoset";
    case ErrorCode::kWidthExceedsTwo: return "WidthExceedsTwo";
    case ErrorCode::kInvalidWindow: return "InvalidWindow";
    case ErrorCode::kRankTooSmall: return "RankTooSmall";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kNotConvex: return "NotConvex";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kDegreeInfeasible: return "DegreeInfeasible";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kOracleInconsistency: return "OracleInconsistency";
    case ErrorCode::kDisagreement: return "Disagreement";
  }
  return "Unknown";
}

}  // namespace hibi
