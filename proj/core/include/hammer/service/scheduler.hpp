#pragma once

#include <chrono>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "hammer/service/strategy.hpp"
#include "hammer/service/task_pool.hpp"

namespace hammer::service {

struct StrategyVerdict {
  std::string name;
  std::string mode;  // full | imports | current | by
  tptp::SzsStatus status = tptp::SzsStatus::GaveUp;
  std::chrono::milliseconds elapsed{0};
  std::size_t premises = 0;
  std::vector<FactId> used;
  bool cancelled = false;  // stopped because another strategy won
  std::string error;       // message when status is Error
};

struct SolveResult {
  FactId goal;
  tptp::SzsStatus status = tptp::SzsStatus::GaveUp;
  std::optional<std::string> winner;
  std::vector<FactId> used;  // raw, implicit facts included
  bool used_minimal = true;
  std::string by_clause;     // post-edited justification
  std::vector<StrategyVerdict> verdicts;  // submission order
  std::chrono::milliseconds elapsed{0};
  std::string proof_output;  // the winner's prover output

  bool proved() const { return status == tptp::SzsStatus::Theorem; }
};

/// Overall verdict when nothing proved the goal: CounterSatisfiable only if
/// a full-library strategy saturated, otherwise Timeout, then ResourceOut,
/// then GaveUp, then Error, whichever occurs first in that order.
tptp::SzsStatus combine_failures(const std::vector<StrategyVerdict>& verdicts);

/// Starts every strategy on `pool`. The first Theorem wins and stops the
/// others; the call returns once all of them have reported. `stop` cancels
/// the whole solve.
SolveResult run_pool(const SnapshotPtr& snapshot, const FactId& goal,
                     const std::vector<Strategy>& strategies, TaskPool& pool,
                     const StrategyRunner& runner, std::stop_token stop = {});

}  // namespace hammer::service
