#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricss {

enum class ErrorCode {
  NonPrimeP,
  ReducibleModulus,
  FieldTooLarge,
  InvalidField,
  DivisionByZero,
  SizeOverflow,
  RankMismatch,
  NotInsideH,
  InvalidFamilyParams,
  NonConvex,
  InvalidCode,
  BudgetExceeded,
  NotFullSupport,
  DegenerateScheme,
  UnqualifiedSet,
  ProductNotDetermined,
  ConstraintViolated,
  MalformedInput,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeP: return "NonPrimeP";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotInsideH: return "NotInsideH";
    case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorCode::NonConvex: return "NonConvex";
    case ErrorCode::InvalidCode: return "InvalidCode";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotFullSupport: return "NotFullSupport";
    case ErrorCode::DegenerateScheme: return "DegenerateScheme";
    case ErrorCode::UnqualifiedSet: return "UnqualifiedSet";
    case ErrorCode::ProductNotDetermined: return "ProductNotDetermined";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

// All library failures are reported through this exception; code() is the
// stable, machine-checkable part and what() carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toricss
