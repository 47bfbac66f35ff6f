#pragma once

#include <stdexcept>
#include <string>

namespace lagmon {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  NonUnimodular,
  NotMonotone,
  SearchTooLarge,
  InconsistentPermutation,
  GridTooLarge,
  NotCritical,
  UnsupportedAction,
  BadDiscriminant,
  NotUnivariate,
  NotInvariant,
  NotFinite,
  Unrecognized,
  TooLarge,
  ParseError,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this exception; the code is
// stable and is what the CLI maps onto exit statuses.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NonUnimodular: return "NON_UNIMODULAR";
    case ErrorCode::NotMonotone: return "NOT_MONOTONE";
    case ErrorCode::SearchTooLarge: return "SEARCH_TOO_LARGE";
    case ErrorCode::InconsistentPermutation: return "INCONSISTENT_PERMUTATION";
    case ErrorCode::GridTooLarge: return "GRID_TOO_LARGE";
    case ErrorCode::NotCritical: return "NOT_CRITICAL";
    case ErrorCode::UnsupportedAction: return "UNSUPPORTED_ACTION";
    case ErrorCode::BadDiscriminant: return "BAD_DISCRIMINANT";
    case ErrorCode::NotUnivariate: return "NOT_UNIVARIATE";
    case ErrorCode::NotInvariant: return "NOT_INVARIANT";
    case ErrorCode::NotFinite: return "NOT_FINITE";
    case ErrorCode::Unrecognized: return "UNRECOGNIZED";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

} // namespace lagmon
