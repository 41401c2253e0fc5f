#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kwk {

enum class ErrorKind {
  Singular,
  DependentForms,
  DegeneratePencil,
  IrrationalEigenvalues,
  HasNilpotentBlock,
  BoundsExceeded,
  LengthConditionViolated,
  InvalidIndex,
  InvalidForm,
  SchemaError,
  Internal,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DependentForms: return "DependentForms";
    case ErrorKind::DegeneratePencil: return "DegeneratePencil";
    case ErrorKind::IrrationalEigenvalues: return "IrrationalEigenvalues";
    case ErrorKind::HasNilpotentBlock: return "HasNilpotentBlock";
    case ErrorKind::BoundsExceeded: return "BoundsExceeded";
    case ErrorKind::LengthConditionViolated: return "LengthConditionViolated";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::InvalidForm: return "InvalidForm";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Schema violations additionally remember the JSON pointer of the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(ErrorKind::SchemaError, pointer + ": " + what), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace kwk
