#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dualcat {

enum class ErrorKind {
  ZeroRealPart,
  DomainError,
  OutOfDomain,
  InvalidParams,
  ImmediateSingularity,
  GridMismatch,
  DegenerateVariation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroRealPart: return "ZeroRealPart";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ImmediateSingularity: return "ImmediateSingularity";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::DegenerateVariation: return "DegenerateVariation";
  }
  return "Unknown";
}

}  // namespace dualcat
