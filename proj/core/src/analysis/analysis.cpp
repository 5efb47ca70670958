#include "hammer/analysis/analysis.hpp"

#include <algorithm>
#include <set>

#include "hammer/error.hpp"
#include "hammer/selection/slice.hpp"

namespace hammer::analysis {

UsedPremises used_premises(const ProofObject& proof) {
  if (!proof.proved()) {
    throw Error(ErrorKind::ContractViolation,
                "used premises requested for a " + std::string(tptp::to_string(proof.status())) +
                    " outcome");
  }
  return {proof.used, proof.used_minimal};
}

corpus::FactList premises_with_implicit(const CorpusSnapshot& snapshot, const FactId& goal,
                                        const std::vector<FactId>& used) {
  // Not a by-list slice: full-library proofs may cite articles outside the
  // goal's import closure.
  corpus::FactList out = selection::implicit_facts_in_scope(snapshot, goal);
  std::set<FactId> seen;
  for (const auto& f : out) seen.insert(f->id);
  for (const auto& id : used) {
    if (id == goal) throw Error(ErrorKind::InvalidArgument, "goal listed among its own premises");
    if (seen.insert(id).second) out.push_back(snapshot.fact(id));
  }
  return out;
}

bool cross_verify(const CorpusSnapshot& snapshot, const FactId& goal,
                  const std::vector<FactId>& used, const ProverConfig& config) {
  const auto premises = premises_with_implicit(snapshot, goal, used);
  return prover::prove(premises, *snapshot.fact(goal), config).proved();
}

std::vector<FactId> minimize(const CorpusSnapshot& snapshot, const FactId& goal,
                             const std::vector<FactId>& premises, const ProverConfig& config) {
  const auto goal_fact = snapshot.fact(goal);
  auto provable = [&](const std::vector<FactId>& set) {
    return prover::prove(premises_with_implicit(snapshot, goal, set), *goal_fact, config).proved();
  };
  std::vector<FactId> current;
  for (const auto& p : premises) {
    if (std::find(current.begin(), current.end(), p) == current.end()) current.push_back(p);
  }
  if (!provable(current)) {
    throw Error(ErrorKind::Unprovable, "cannot minimize unproven inference " + goal.to_string());
  }
  // A bounded prover is not monotone: a drop rejected early can succeed once
  // other premises are gone, hence the repeat.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < current.size();) {
      auto trial = current;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (provable(trial)) {
        current = std::move(trial);
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return current;
}

std::vector<corpus::FactRef> by_clause_refs(const CorpusSnapshot& snapshot,
                                            const std::vector<FactId>& used,
                                            std::string_view current_article) {
  std::vector<corpus::FactPtr> local;
  std::set<std::string> qualified;
  for (const auto& id : used) {
    auto f = snapshot.fact(id);
    if (f->is_implicit()) continue;
    if (id.article == current_article) {
      local.push_back(f);
    } else {
      qualified.insert(id.to_string());
    }
  }
  std::sort(local.begin(), local.end(),
            [](const auto& a, const auto& b) { return a->position < b->position; });
  local.erase(std::unique(local.begin(), local.end()), local.end());
  std::vector<corpus::FactRef> out;
  for (const auto& f : local) out.push_back({std::nullopt, f->id.label});
  for (const auto& q : qualified) {
    auto id = FactId::parse(q);
    out.push_back({id.article, id.label});
  }
  return out;
}

std::string render_by_clause(const CorpusSnapshot& snapshot, const std::vector<FactId>& used,
                             std::string_view current_article) {
  const auto refs = by_clause_refs(snapshot, used, current_article);
  if (refs.empty()) return ";";
  std::string out = "by ";
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (i != 0) out += ", ";
    out += refs[i].to_string();
  }
  return out + ";";
}

std::string ProbeWarning::to_string() const {
  std::string out = "inconsistent(" + article + ", " + before_label + ", used=[";
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (i != 0) out += ", ";
    out += used[i].to_string();
  }
  return out + "]).";
}

std::string ProbeReport::to_string() const {
  std::string out;
  for (const auto& w : warnings) out += w.to_string() + "\n";
  return out;
}

ProbeReport consistency_probe(const CorpusSnapshot& snapshot, std::string_view article,
                              const ProverConfig& config) {
  ProbeReport report;
  report.article = std::string(article);
  std::set<FactId> quarantined;
  for (const auto& fact : snapshot.article(article).facts) {
    if (fact->status != corpus::FactStatus::Assumed) continue;
    report.probed.push_back(fact->id.label);

    corpus::FactList context;
    for (const auto& f : selection::implicit_facts_in_scope(snapshot, fact->id)) {
      if (f->id.article != article) context.push_back(f);
    }
    // Facts justified (transitively) by a quarantined assumption go too.
    std::set<FactId> tainted = quarantined;
    for (const auto& f : snapshot.context_before(fact->id)) {
      if (f->justification && f->justification->kind == tptp::Justification::Kind::By) {
        for (const auto& ref : f->justification->refs) {
          if (tainted.contains(snapshot.resolve_reference(article, ref)->id)) tainted.insert(f->id);
        }
      }
      if (!tainted.contains(f->id)) context.push_back(f);
    }
    context.push_back(fact);

    const auto proof = prover::refute(context, config);
    if (!proof.proved()) continue;
    report.warnings.push_back({std::string(article), fact->id.label, proof.used});
    bool blamed_assumption = false;
    for (const auto& id : proof.used) {
      if (snapshot.fact(id)->status == corpus::FactStatus::Assumed) {
        quarantined.insert(id);
        blamed_assumption = true;
      }
    }
    if (!blamed_assumption) break;  // the unassumed context itself is contradictory
  }
  return report;
}

}  // namespace hammer::analysis
