#pragma once

#include <stdexcept>
#include <string>

namespace elocc {

/// Machine-readable error taxonomy. Every throwing operation in the library
/// throws elocc::Error with one of these codes; the CLI maps input errors to
/// exit code 2 and precondition violations to exit code 3.
enum class ErrorCode {
  negative_entry,
  sum_not_one,
  rank_order_violation,
  unsolvable_pair,
  degenerate_catalyst,
  index_out_of_range,
  invalid_grid,
  dimension_mismatch,
  weight_sum_not_one,
  protocol_infeasible,
  parse_error,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::negative_entry: return "NegativeEntry";
    case ErrorCode::sum_not_one: return "SumNotOne";
    case ErrorCode::rank_order_violation: return "RankOrderViolation";
    case ErrorCode::unsolvable_pair: return "UnsolvablePair";
    case ErrorCode::degenerate_catalyst: return "DegenerateCatalyst";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::invalid_grid: return "InvalidGrid";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::weight_sum_not_one: return "WeightSumNotOne";
    case ErrorCode::protocol_infeasible: return "ProtocolInfeasible";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "UnknownError";
}

/// True for errors caused by malformed input rather than by a violated
/// mathematical precondition.
inline bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::negative_entry:
    case ErrorCode::sum_not_one:
    case ErrorCode::index_out_of_range:
    case ErrorCode::invalid_grid:
    case ErrorCode::dimension_mismatch:
    case ErrorCode::weight_sum_not_one:
    case ErrorCode::parse_error:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace elocc
