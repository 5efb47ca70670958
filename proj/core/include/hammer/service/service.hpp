#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "hammer/analysis/analysis.hpp"
#include "hammer/selection/advisor.hpp"
#include "hammer/service/config.hpp"
#include "hammer/service/jobs.hpp"
#include "hammer/service/scheduler.hpp"

namespace hammer::service {

using ModelPtr = std::shared_ptr<const selection::AdvisorModel>;

struct SolveRequest {
  FactId goal;
  std::optional<selection::SliceMode::Kind> mode;  // all four when absent
  std::optional<std::chrono::milliseconds> timeout;
  std::optional<selection::SineParams> sine;
  std::vector<Strategy> strategies;  // overrides mode/sine when nonempty
};

struct VerifyEntry {
  std::string label;
  tptp::SzsStatus status = tptp::SzsStatus::GaveUp;
  std::chrono::milliseconds elapsed{0};
  std::vector<FactId> used;
  std::string by_clause;
};

struct VerifyReport {
  std::string article;
  std::vector<VerifyEntry> entries;  // by-justified facts, article order
  std::vector<std::string> assumed;
  std::vector<std::string> unjustified;
  std::chrono::milliseconds elapsed{0};

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

struct Explanation {
  FactId goal;
  SolveResult solve;
  std::string outcome;  // "Proved" or "Unsolved"
};

struct TrainSummary {
  std::size_t examples = 0;
  std::size_t facts = 0;
};

struct ArticleUpload {
  std::string article;
  std::vector<std::string> facts;  // `article:label`
  std::vector<std::string> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

/// A goal and the premises one of its proofs used; the training data.
struct ProofRecord {
  FactId goal;
  std::vector<FactId> used;
};

/// The hammer: solves, verification, hints, explanations, probes and
/// training over one current corpus snapshot and advisor model. Both are
/// immutable values swapped whole; jobs already running keep the snapshot
/// they started with.
class HammerService {
 public:
  explicit HammerService(ServiceConfig config, SnapshotPtr snapshot,
                         StrategyRunner runner = run_strategy);
  ~HammerService();

  HammerService(const HammerService&) = delete;
  HammerService& operator=(const HammerService&) = delete;

  const ServiceConfig& config() const { return config_; }
  SnapshotPtr snapshot() const;
  ModelPtr model() const;
  void install_model(ModelPtr model);

  /// Adds or replaces an article; the snapshot changes only on success.
  ArticleUpload add_article(std::string_view text);

  std::vector<Strategy> strategies_for(const SolveRequest& request) const;

  /// Synchronous solve.
  SolveResult solve(const SolveRequest& request, std::stop_token stop = {});

  /// Asynchronous solve: validates the goal and strategies, queues, returns
  /// the job id.
  std::string submit_solve(const SolveRequest& request);
  std::string submit_verify(const std::string& article);
  std::string submit_probe(const std::string& article);
  std::string submit_train();

  std::optional<Job> job(const std::string& id) const { return jobs_.get(id); }
  std::optional<Job> wait(const std::string& id, std::chrono::milliseconds timeout) const {
    return jobs_.wait(id, timeout);
  }
  bool cancel(const std::string& id);
  const JobTable& jobs() const { return jobs_; }

  /// Checks every by-justified fact of the article from its own references,
  /// inferences in parallel.
  VerifyReport verify_article(const std::string& article,
                              std::optional<prover::ProverConfig> config = std::nullopt);

  /// Ranks the imports-slice candidates (implicit facts excluded).
  std::vector<selection::Hint> hints(const FactId& goal, std::size_t k) const;

  /// Solves a by-justified fact from its references.
  Explanation explain(const FactId& goal);

  analysis::ProbeReport probe(const std::string& article);

  /// Rebuilds the advisor from the stored proofs and swaps it in.
  TrainSummary train();

  /// Proofs found so far (latest per goal).
  std::vector<ProofRecord> proof_records() const;
  void record_proof(const FactId& goal, const std::vector<FactId>& used);

  /// The TPTP problem a strategy of this mode would hand to the prover.
  std::string export_problem(const FactId& goal, selection::SliceMode::Kind mode) const;

 private:
  std::string submit(JobKind kind, std::string subject,
                      std::function<nlohmann::json(std::stop_token)> work);

  ServiceConfig config_;
  StrategyRunner runner_;
  mutable std::mutex slot_mutex_;
  SnapshotPtr snapshot_;
  ModelPtr model_;
  std::map<FactId, std::vector<FactId>> proofs_;
  std::map<std::string, std::stop_source> running_;
  JobTable jobs_;
  std::unique_ptr<TaskPool> provers_;
  std::unique_ptr<TaskPool> job_workers_;  // declared last: joined first
};

}  // namespace hammer::service
