#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsslab {

enum class ErrorKind {
  ParseError,
  DegreeOutOfRange,
  NotIrreducible,
  NotPrimitive,
  FieldMismatch,
  ZeroInverse,
  ZeroLog,
  ShiftOutOfRange,
  SingularSystem,
  NoPartner,
  BadPeriodLength,
  OddLength,
  LengthMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. what() starts with the kind name,
/// e.g. "NotIrreducible: x^4+x^2+1 = (x^2+x+1)(x^2+x+1)".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gsslab
