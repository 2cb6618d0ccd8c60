#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace redcor {

enum class ErrorCode {
  MixedRings,
  IllFormed,
  NotWellDefined,
  UnsupportedRing,
  UnsupportedQuery,
  BoundExceeded,
  PredicateFailed,
  OutOfRange,
  BadExponents,
  EmptySequence,
  TooLarge,
  InfiniteModule,
  ParseError,
  SchemaVersionMismatch,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::IllFormed: return "IllFormed";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::UnsupportedQuery: return "UnsupportedQuery";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::PredicateFailed: return "PredicateFailed";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadExponents: return "BadExponents";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InfiniteModule: return "InfiniteModule";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaVersionMismatch: return "SchemaVersionMismatch";
  }
  return "Unknown";
}

/// All library failures are reported through this exception; `code()` is
/// stable and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace redcor
