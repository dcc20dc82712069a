#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace copos {

enum class ErrorCode {
  OrderTooSmall,
  DimensionMismatch,
  InvalidPermutation,
  NonpositiveScale,
  AsymmetricMatrix,
  NoNegativeSign,
  AlreadySimplicial,
  InvalidLabel,
  OutOfRange,
  DegenerateSimplex,
  WorkLimitExceeded,
  WitnessLiftFailure,
  WrongOrder,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::NoNegativeSign: return "NoNegativeSign";
    case ErrorCode::AlreadySimplicial: return "AlreadySimplicial";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::WorkLimitExceeded: return "WorkLimitExceeded";
    case ErrorCode::WitnessLiftFailure: return "WitnessLiftFailure";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the contract
/// that was violated; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace copos
