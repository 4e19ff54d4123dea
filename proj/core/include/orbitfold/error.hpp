#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitfold {

enum class ErrorCode {
  RepeatedPoint,
  OutOfRange,
  Malformed,
  DegreeMismatch,
  DomainMismatch,
  KTooLarge,
  DomainTooLarge,
  SearchBudgetExceeded,
  NotTransitive,
  BadDegree,
  NotPrime,
  ValidationFailed,
  MissingData,
  UnexpectedOrbitShape,
  OrbitCapExceeded,
  NotFound,
  UnknownLabel,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RepeatedPoint: return "RepeatedPoint";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::DomainTooLarge: return "DomainTooLarge";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::MissingData: return "MissingData";
    case ErrorCode::UnexpectedOrbitShape: return "UnexpectedOrbitShape";
    case ErrorCode::OrbitCapExceeded: return "OrbitCapExceeded";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
  }
  return "Unknown";
}

}  // namespace orbitfold
