#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hammer {

enum class ErrorKind {
  Syntax,
  DuplicateLabel,
  FreeVariable,
  ImportCycle,
  UnresolvedReference,
  NotImported,
  ArityClash,
  UnknownFact,
  LabelCollision,
  ContractViolation,
  Unprovable,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every hammer component. The kind lets callers (the CLI,
/// the HTTP layer) map failures onto exit codes and status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hammer
