#include "hammer/prover/prove.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hammer/error.hpp"
#include "hammer/prover/clausify.hpp"
#include "hammer/tptp/problem.hpp"

namespace hammer::prover {

void ProverConfig::validate() const {
  if (time_limit.count() <= 0) throw Error(ErrorKind::InvalidArgument, "time limit must be positive");
  if (clause_limit == 0) throw Error(ErrorKind::InvalidArgument, "clause limit must be positive");
  if (external && external->command.empty()) {
    throw Error(ErrorKind::InvalidArgument, "external prover '" + external->name + "' has no command");
  }
}

namespace {

using Clock = std::chrono::steady_clock;

std::string node_id(ClauseId id) { return "c" + std::to_string(id); }

std::vector<tptp::DerivationNode> derivation_of(const SaturationOutcome& outcome) {
  std::vector<tptp::DerivationNode> nodes;
  for (const auto& c : outcome.refutation) {
    tptp::DerivationNode n;
    n.id = node_id(c.id);
    n.formula = render_clause(*outcome.symbols, *outcome.bank, c);
    if (c.origin.is_leaf()) {
      n.source = tptp::DerivationNode::Source::Leaf;
      n.leaf_label = c.origin.kind == Origin::Kind::EqAxiom ? "eq_axiom" : c.origin.source;
    } else {
      n.source = tptp::DerivationNode::Source::Inference;
      n.rule = std::string(rule_name(c.origin.kind));
      for (auto p : c.origin.parents) n.parents.push_back(node_id(p));
    }
    nodes.push_back(std::move(n));
  }
  return nodes;
}

std::string builtin_output(const tptp::SzsVerdict& verdict, const std::string& problem) {
  std::string out = "% SZS status " + std::string(tptp::to_string(verdict.status)) + " for " + problem + "\n";
  if (!verdict.derivation) return out;
  out += "% SZS output start Proof for " + problem + "\n";
  for (const auto& n : *verdict.derivation) {
    out += "[" + n.id + "] " + n.formula + " <- ";
    if (n.source == tptp::DerivationNode::Source::Leaf) {
      out += n.leaf_label == "eq_axiom" ? std::string("eq_axiom") : "input " + n.leaf_label;
    } else {
      out += n.rule;
      for (const auto& p : n.parents) out += " " + p;
    }
    out += "\n";
  }
  out += "% SZS output end Proof for " + problem + "\n";
  return out;
}

struct Prepared {
  tptp::Problem problem;
  std::map<std::string, corpus::FactId> ids;  // qualified label -> premise
  std::vector<LabeledFormula> premises;
  LabeledFormula goal;
};

Prepared prepare(const corpus::FactList& premises, const corpus::Fact& goal) {
  Prepared p;
  std::vector<tptp::ProblemFormula> formulas;
  for (const auto& f : premises) {
    formulas.push_back({f->id.article, f->id.label, f->formula});
    const auto q = tptp::qualified_label(f->id.article, f->id.label);
    p.ids.emplace(q, f->id);
    p.premises.push_back({q, f->formula});
  }
  p.problem = tptp::render_problem({goal.id.article, goal.id.label, goal.formula}, formulas);
  p.goal = {tptp::qualified_label(goal.id.article, goal.id.label), goal.formula};
  return p;
}

ProofObject run_builtin(const Prepared& p, const ProverConfig& config, std::stop_token stop) {
  ProofObject proof;
  auto outcome = saturate(clausify(p.premises, p.goal), config.limits(), std::move(stop));
  proof.verdict.status = outcome.status;
  proof.stats = outcome.stats;
  if (outcome.status == tptp::SzsStatus::Theorem) {
    proof.verdict.derivation = derivation_of(outcome);
    std::set<corpus::FactId> used;
    for (const auto& c : outcome.refutation) {
      if (c.origin.kind != Origin::Kind::Input) continue;
      if (auto it = p.ids.find(c.origin.source); it != p.ids.end()) used.insert(it->second);
    }
    proof.used.assign(used.begin(), used.end());
  }
  proof.output = builtin_output(proof.verdict, p.goal.label);
  return proof;
}

ProofObject run_external_engine(const Prepared& p, const corpus::FactList& premises,
                                const ProverConfig& config, std::stop_token stop) {
  ProofObject proof;
  auto run = run_external(*config.external, p.problem.text, config.time_limit, std::move(stop));
  proof.verdict = std::move(run.verdict);
  proof.output = std::move(run.output);
  if (proof.verdict.status != tptp::SzsStatus::Theorem) return proof;
  if (!proof.verdict.derivation) {
    for (const auto& f : premises) proof.used.push_back(f->id);
    std::sort(proof.used.begin(), proof.used.end());
    proof.used.erase(std::unique(proof.used.begin(), proof.used.end()), proof.used.end());
    proof.used_minimal = false;
    return proof;
  }
  std::set<corpus::FactId> used;
  for (const auto& label : proof.verdict.leaf_labels()) {
    if (auto it = p.ids.find(label); it != p.ids.end()) used.insert(it->second);
  }
  proof.used.assign(used.begin(), used.end());
  return proof;
}

}  // namespace

ProofObject prove(const corpus::FactList& premises, const corpus::Fact& goal,
                  const ProverConfig& config, std::stop_token stop) {
  config.validate();
  const auto start = Clock::now();
  const auto prepared = prepare(premises, goal);
  ProofObject proof = config.external ? run_external_engine(prepared, premises, config, std::move(stop))
                                      : run_builtin(prepared, config, std::move(stop));
  proof.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return proof;
}

ProofObject refute(const corpus::FactList& facts, const ProverConfig& config,
                   std::stop_token stop) {
  corpus::Fact goal;
  goal.id = {"probe", "falsum"};
  goal.role = tptp::Role::Conjecture;
  goal.formula = tptp::Formula::falsum();
  return prove(facts, goal, config, std::move(stop));
}

}  // namespace hammer::prover
