#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <stop_token>
#include <vector>

#include "hammer/prover/clause.hpp"
#include "hammer/tptp/szs.hpp"

namespace hammer::prover {

struct SaturationLimits {
  std::chrono::milliseconds time_limit{10'000};
  std::size_t clause_limit = 200'000;  // kept clauses, inputs included
  /// Given-clause picks by smallest weight per pick by age.
  std::size_t weight_ratio = 5;
  /// Share of the time limit spent first on a set-of-support search
  /// (every inference involves a goal descendant, no equality axioms,
  /// an eighth of the clause limit). It only ever answers Theorem; the
  /// complete calculus then runs on the remaining time.
  double support_share = 0.3;
};

struct SaturationStats {
  std::size_t generated = 0;
  std::size_t kept = 0;
  std::size_t activated = 0;
};

struct SaturationOutcome {
  tptp::SzsStatus status = tptp::SzsStatus::GaveUp;
  /// On Theorem: every ancestor of the empty clause, parents before
  /// children, ending with the empty clause.
  std::vector<Clause> refutation;
  std::shared_ptr<SymbolTable> symbols;
  std::shared_ptr<TermBank> bank;
  SaturationStats stats;
};

/// Given-clause loop with binary resolution, factoring, tautology deletion
/// and forward/backward subsumption. The complete phase uses ordered
/// resolution with negative literal selection. Theorem when the empty clause is
/// derived; CounterSatisfiable only when the passive set runs dry; Timeout,
/// ResourceOut (clause limit) or GaveUp (stop requested) otherwise.
/// Deterministic for fixed input order and limits that are not hit.
SaturationOutcome saturate(ClauseSet clauses, const SaturationLimits& limits,
                           std::stop_token stop = {});

}  // namespace hammer::prover
