#include "hammer/error.hpp"

namespace hammer {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::DuplicateLabel: return "duplicate_label";
    case ErrorKind::FreeVariable: return "free_variable";
    case ErrorKind::ImportCycle: return "import_cycle";
    case ErrorKind::UnresolvedReference: return "unresolved_reference";
    case ErrorKind::NotImported: return "not_imported";
    case ErrorKind::ArityClash: return "arity_clash";
    case ErrorKind::UnknownFact: return "unknown_fact";
    case ErrorKind::LabelCollision: return "label_collision";
    case ErrorKind::ContractViolation: return "contract_violation";
    case ErrorKind::Unprovable: return "unprovable";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace hammer
