#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hammer::tptp {

enum class SzsStatus {
  Theorem,
  CounterSatisfiable,
  Timeout,
  GaveUp,
  ResourceOut,
  Error,
};

std::string_view to_string(SzsStatus status);
std::optional<SzsStatus> szs_status_from_string(std::string_view text);

struct DerivationNode {
  enum class Source { Leaf, Inference };

  std::string id;
  std::string formula;
  Source source = Source::Leaf;
  std::string leaf_label;            // problem label for leaves
  std::string rule;                  // inference rule name
  std::vector<std::string> parents;  // earlier node ids

  bool derives_falsum() const;
};

struct SzsVerdict {
  SzsStatus status = SzsStatus::Error;
  std::optional<std::vector<DerivationNode>> derivation;
  std::vector<std::string> warnings;
  std::string excerpt;  // raw output excerpt when no status could be read

  /// Leaf labels of the derivation, in node order (empty when absent).
  std::vector<std::string> leaf_labels() const;
};

/// `Builtin` is the line format printed by the built-in engine:
/// `[id] clause <- rule parent...` / `[id] clause <- input label`.
/// `Tstp` is the standard annotated-formula derivation block.
enum class OutputDialect { Builtin, Tstp };

/// Reads the `% SZS status` line and, when present, the derivation between
/// `% SZS output start` and `% SZS output end`. A malformed derivation keeps
/// the status, drops the derivation and records a warning.
SzsVerdict parse_prover_output(std::string_view text, OutputDialect dialect);

/// Checks the derivation invariants: parents precede children and, for a
/// Theorem, exactly one node derives `$false`. Returns an error description
/// or nothing when well formed.
std::optional<std::string> check_derivation(const std::vector<DerivationNode>& nodes,
                                            SzsStatus status);

}  // namespace hammer::tptp
