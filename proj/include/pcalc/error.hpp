#pragma once

#include <stdexcept>
#include <string>

namespace pcalc {

enum class ErrorKind {
  ChartMismatch,
  KindMismatch,
  DivisionByZero,
  IndexOutOfRange,
  DimensionMismatch,
  Pole,
  ZeroInput,
  Precondition,
  NonRegular,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the calculus core carries one of the kinds above so
/// callers (the CLI in particular) can classify it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ChartMismatch: return "chart mismatch";
    case ErrorKind::KindMismatch: return "kind mismatch";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::IndexOutOfRange: return "index out of range";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::ZeroInput: return "zero input";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::NonRegular: return "non-regular entry";
    case ErrorKind::InvalidArgument: return "invalid argument";
  }
  return "error";
}

}  // namespace pcalc
