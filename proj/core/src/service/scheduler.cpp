#include "hammer/service/scheduler.hpp"

#include <condition_variable>
#include <memory>
#include <mutex>

#include "hammer/analysis/analysis.hpp"
#include "hammer/error.hpp"

namespace hammer::service {

using tptp::SzsStatus;
using Clock = std::chrono::steady_clock;

SzsStatus combine_failures(const std::vector<StrategyVerdict>& verdicts) {
  auto any = [&](auto pred) {
    return std::any_of(verdicts.begin(), verdicts.end(), pred);
  };
  if (any([](const auto& v) { return v.mode == "full" && v.status == SzsStatus::CounterSatisfiable; })) {
    return SzsStatus::CounterSatisfiable;
  }
  for (auto s : {SzsStatus::Timeout, SzsStatus::ResourceOut, SzsStatus::GaveUp}) {
    if (any([s](const auto& v) { return v.status == s; })) return s;
  }
  if (any([](const auto& v) { return v.status == SzsStatus::Error; })) return SzsStatus::Error;
  return SzsStatus::GaveUp;  // only slice-relative countermodels
}

namespace {

struct PoolState {
  std::mutex mutex;
  std::condition_variable finished;
  std::size_t pending = 0;
  std::optional<std::size_t> winner;
  std::vector<StrategyVerdict> verdicts;
  std::vector<prover::ProofObject> proofs;
  std::stop_source cancel;
};

}  // namespace

SolveResult run_pool(const SnapshotPtr& snapshot, const FactId& goal_id,
                     const std::vector<Strategy>& strategies, TaskPool& pool,
                     const StrategyRunner& runner, std::stop_token stop) {
  if (strategies.empty()) throw Error(ErrorKind::InvalidArgument, "no strategies to run");
  const auto start = Clock::now();
  const auto goal = snapshot->fact(goal_id);

  auto state = std::make_shared<PoolState>();
  state->pending = strategies.size();
  state->verdicts.resize(strategies.size());
  state->proofs.resize(strategies.size());
  std::stop_callback forward(stop, [state] { state->cancel.request_stop(); });

  for (std::size_t i = 0; i < strategies.size(); ++i) {
    auto& v = state->verdicts[i];
    v.name = strategies[i].name;
    v.mode = std::string(selection::to_string(strategies[i].mode.kind));
    pool.submit([state, i, snapshot, goal, strategy = strategies[i], runner] {
      const auto token = state->cancel.get_token();
      const auto t0 = Clock::now();
      StrategyOutcome outcome;
      std::string error;
      if (token.stop_requested()) {
        outcome.proof.verdict.status = SzsStatus::GaveUp;
      } else {
        try {
          outcome = runner(*snapshot, *goal, strategy, token);
        } catch (const std::exception& e) {
          outcome.proof.verdict.status = SzsStatus::Error;
          error = e.what();
        }
      }
      std::lock_guard lock(state->mutex);
      auto& v = state->verdicts[i];
      v.status = outcome.proof.status();
      v.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
      v.premises = outcome.premise_count;
      v.used = outcome.proof.used;
      v.error = std::move(error);
      v.cancelled = state->cancel.stop_requested() && v.status == SzsStatus::GaveUp;
      if (outcome.proof.proved() && !state->winner) {
        state->winner = i;
        state->cancel.request_stop();
      }
      state->proofs[i] = std::move(outcome.proof);
      if (--state->pending == 0) state->finished.notify_all();
    });
  }

  std::unique_lock lock(state->mutex);
  state->finished.wait(lock, [&] { return state->pending == 0; });

  SolveResult result;
  result.goal = goal_id;
  result.verdicts = state->verdicts;
  if (state->winner) {
    const auto& proof = state->proofs[*state->winner];
    result.status = SzsStatus::Theorem;
    result.winner = state->verdicts[*state->winner].name;
    result.used = proof.used;
    result.used_minimal = proof.used_minimal;
    result.proof_output = proof.output;
    result.by_clause = analysis::render_by_clause(*snapshot, proof.used, goal_id.article);
  } else {
    result.status = combine_failures(result.verdicts);
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return result;
}

}  // namespace hammer::service
