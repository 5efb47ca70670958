#pragma once

#include <chrono>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "hammer/corpus/snapshot.hpp"
#include "hammer/prover/external.hpp"
#include "hammer/prover/saturation.hpp"
#include "hammer/tptp/szs.hpp"

namespace hammer::prover {

struct ProverConfig {
  std::chrono::milliseconds time_limit{10'000};
  std::size_t clause_limit = 200'000;
  std::optional<ExternalProver> external;  // built-in engine when absent

  void validate() const;  // throws InvalidArgument on non-positive limits
  SaturationLimits limits() const { return {time_limit, clause_limit}; }
};

struct ProofObject {
  /// Status plus, on Theorem, the refutation as derivation nodes (clause
  /// ids `c<n>`; leaves carry the qualified problem label or `eq_axiom`).
  tptp::SzsVerdict verdict;
  /// Premises the refutation depends on, sorted; the goal and equality
  /// axioms are never included.
  std::vector<corpus::FactId> used;
  /// False when an external prover gave no derivation and `used` fell back
  /// to every provided premise.
  bool used_minimal = true;
  std::chrono::milliseconds elapsed{0};
  /// Prover output in SZS form (built-in engine: the builtin dialect).
  std::string output;
  SaturationStats stats;

  tptp::SzsStatus status() const { return verdict.status; }
  bool proved() const { return verdict.status == tptp::SzsStatus::Theorem; }
};

/// Clausifies `premises` with the negated goal and runs the configured
/// engine. Used premises are the refutation's input leaves mapped back to
/// fact ids. The problem labels are `article__label`.
ProofObject prove(const corpus::FactList& premises, const corpus::Fact& goal,
                  const ProverConfig& config, std::stop_token stop = {});

/// Refutes a set of facts outright (goal `$false`), as used by the
/// consistency probe.
ProofObject refute(const corpus::FactList& facts, const ProverConfig& config,
                   std::stop_token stop = {});

}  // namespace hammer::prover
