#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "hammer/corpus/snapshot.hpp"
#include "hammer/prover/prove.hpp"
#include "hammer/selection/sine.hpp"
#include "hammer/selection/slice.hpp"

namespace hammer::service {

using corpus::FactId;
using corpus::SnapshotPtr;

/// One way of attacking a goal: a premise slice, optional SInE narrowing
/// and an engine configuration.
struct Strategy {
  std::string name;
  selection::SliceMode mode;
  std::optional<selection::SineParams> sine;
  prover::ProverConfig engine;
};

/// What a strategy produced.
struct StrategyOutcome {
  prover::ProofObject proof;
  std::size_t premise_count = 0;
};

/// Runs one strategy. The default slices, filters and proves; tests inject
/// instrumented runners. Must return promptly once `stop` is requested.
using StrategyRunner = std::function<StrategyOutcome(
    const corpus::CorpusSnapshot&, const corpus::Fact& goal, const Strategy&, std::stop_token)>;

StrategyOutcome run_strategy(const corpus::CorpusSnapshot& snapshot, const corpus::Fact& goal,
                             const Strategy& strategy, std::stop_token stop);

/// Premises the strategy hands to the prover.
corpus::FactList strategy_premises(const corpus::CorpusSnapshot& snapshot, const FactId& goal,
                                   const Strategy& strategy);

/// The by-list slice of a fact: its own justification, or empty refs.
selection::SliceMode justification_mode(const corpus::Fact& goal);

/// A single strategy for `kind`; ByList uses the goal's own justification
/// and SInE applies to FullLibrary and ImportsOnly only.
Strategy make_strategy(const corpus::Fact& goal, selection::SliceMode::Kind kind,
                       const prover::ProverConfig& engine,
                       const std::optional<selection::SineParams>& sine);

/// The four slices, in the order full, imports, current, by.
std::vector<Strategy> default_strategies(const corpus::Fact& goal,
                                         const prover::ProverConfig& engine,
                                         const selection::SineParams& sine);

}  // namespace hammer::service
