#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hammer/corpus/snapshot.hpp"
#include "hammer/prover/prove.hpp"

namespace hammer::analysis {

using corpus::CorpusSnapshot;
using corpus::FactId;
using prover::ProofObject;
using prover::ProverConfig;

struct UsedPremises {
  std::vector<FactId> facts;  // sorted
  bool minimal = true;        // false for the all-premises fallback
};

/// Premises a Theorem depends on. Throws ContractViolation otherwise.
UsedPremises used_premises(const ProofObject& proof);

/// `used` plus the implicit facts in scope of `goal`, in load order.
corpus::FactList premises_with_implicit(const CorpusSnapshot& snapshot, const FactId& goal,
                                        const std::vector<FactId>& used);

/// Re-proves `goal` from exactly `used` and the implicit facts.
bool cross_verify(const CorpusSnapshot& snapshot, const FactId& goal,
                  const std::vector<FactId>& used, const ProverConfig& config);

/// Drops premises left to right, keeping a drop whenever the goal stays
/// provable (implicit facts are always available). Passes repeat until no
/// single premise can go, so the result is 1-minimal for this prover and
/// config. Throws Unprovable when the full list does not prove the goal.
std::vector<FactId> minimize(const CorpusSnapshot& snapshot, const FactId& goal,
                             const std::vector<FactId>& premises, const ProverConfig& config);

/// Editable justification for a fact of `current_article`: implicit facts
/// removed, local refs unqualified and in article order, then qualified
/// refs sorted. `by a, other:b;` or `;` when nothing is left.
std::string render_by_clause(const CorpusSnapshot& snapshot, const std::vector<FactId>& used,
                             std::string_view current_article);

/// The references a by clause would cite, in rendering order.
std::vector<corpus::FactRef> by_clause_refs(const CorpusSnapshot& snapshot,
                                            const std::vector<FactId>& used,
                                            std::string_view current_article);

struct ProbeWarning {
  std::string article;
  std::string before_label;  // the assumed fact at which the context broke
  std::vector<FactId> used;

  std::string to_string() const;  // inconsistent(article, label, used=[...]).
};

struct ProbeReport {
  std::string article;
  std::vector<ProbeWarning> warnings;
  std::vector<std::string> probed;  // labels of the assumed facts checked

  std::string to_string() const;  // one line per warning
};

/// Looks for contradictions introduced by assumed facts. At every assumed
/// fact the current-article context up to and including it, plus implicit
/// facts, is refuted. A refutation is reported, and the assumed facts it
/// used are excluded from later contexts so one mistake is reported once.
ProbeReport consistency_probe(const CorpusSnapshot& snapshot, std::string_view article,
                              const ProverConfig& config);

}  // namespace hammer::analysis
