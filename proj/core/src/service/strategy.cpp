#include "hammer/service/strategy.hpp"

namespace hammer::service {

using selection::SliceMode;

selection::SliceMode justification_mode(const corpus::Fact& goal) {
  if (goal.justification && goal.justification->kind == tptp::Justification::Kind::By) {
    return SliceMode::by_list(goal.justification->refs);
  }
  return SliceMode::by_list({});
}

Strategy make_strategy(const corpus::Fact& goal, SliceMode::Kind kind,
                       const prover::ProverConfig& engine,
                       const std::optional<selection::SineParams>& sine) {
  Strategy s;
  s.name = std::string(selection::to_string(kind));
  s.mode = kind == SliceMode::Kind::ByList ? justification_mode(goal) : SliceMode{kind, {}};
  if (sine && (kind == SliceMode::Kind::FullLibrary || kind == SliceMode::Kind::ImportsOnly)) {
    s.sine = sine;
    s.name += "+sine";
  }
  s.engine = engine;
  if (engine.external) s.name += "@" + engine.external->name;
  return s;
}

std::vector<Strategy> default_strategies(const corpus::Fact& goal,
                                         const prover::ProverConfig& engine,
                                         const selection::SineParams& sine) {
  std::vector<Strategy> out;
  for (auto kind : {SliceMode::Kind::FullLibrary, SliceMode::Kind::ImportsOnly,
                    SliceMode::Kind::CurrentArticle, SliceMode::Kind::ByList}) {
    out.push_back(make_strategy(goal, kind, engine, sine));
  }
  return out;
}

corpus::FactList strategy_premises(const corpus::CorpusSnapshot& snapshot, const FactId& goal,
                                   const Strategy& strategy) {
  auto premises = selection::slice(snapshot, goal, strategy.mode);
  if (!strategy.sine) return premises;
  // Implicit facts join the slice whatever SInE decides.
  auto selected = selection::sine_select(snapshot.fact(goal)->formula, premises,
                                         snapshot.symbol_occurrences(), *strategy.sine);
  corpus::FactList out;
  std::size_t next = 0;
  for (const auto& f : premises) {
    const bool chosen = next < selected.size() && selected[next] == f;
    if (chosen) ++next;
    if (chosen || f->is_implicit()) out.push_back(f);
  }
  return out;
}

StrategyOutcome run_strategy(const corpus::CorpusSnapshot& snapshot, const corpus::Fact& goal,
                             const Strategy& strategy, std::stop_token stop) {
  StrategyOutcome out;
  const auto premises = strategy_premises(snapshot, goal.id, strategy);
  out.premise_count = premises.size();
  out.proof = prover::prove(premises, goal, strategy.engine, std::move(stop));
  return out;
}

}  // namespace hammer::service
