#include "hammer/service/service.hpp"

#include <condition_variable>
#include <filesystem>
#include <set>
#include <fstream>
#include <sstream>

#include "hammer/error.hpp"
#include "hammer/service/json_codec.hpp"
#include "hammer/tptp/parser.hpp"
#include "hammer/tptp/problem.hpp"

namespace hammer::service {

using selection::SliceMode;
using tptp::SzsStatus;
using Clock = std::chrono::steady_clock;

namespace {

std::chrono::milliseconds since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
}

// Runs fn(i) for i in [0, n) on the pool and waits for all of them.
template <typename Fn>
void parallel_for(TaskPool& pool, std::size_t n, Fn fn) {
  std::mutex mutex;
  std::condition_variable done;
  std::size_t pending = n;
  for (std::size_t i = 0; i < n; ++i) {
    pool.submit([&, i] {
      fn(i);
      std::lock_guard lock(mutex);
      if (--pending == 0) done.notify_all();
    });
  }
  std::unique_lock lock(mutex);
  done.wait(lock, [&] { return pending == 0; });
}

void write_file_atomically(const std::string& path, const std::string& text) {
  const auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) {
    return e.status != SzsStatus::Theorem;
  }));
}

HammerService::HammerService(ServiceConfig config, SnapshotPtr snapshot, StrategyRunner runner)
    : config_(std::move(config)),
      runner_(std::move(runner)),
      snapshot_(std::move(snapshot)),
      model_(std::make_shared<selection::AdvisorModel>()),
      jobs_(config_.job_log) {
  config_.engine.validate();
  if (!snapshot_) throw Error(ErrorKind::InvalidArgument, "service needs a corpus snapshot");
  if (config_.model && std::filesystem::exists(*config_.model)) {
    std::ifstream in(*config_.model);
    std::stringstream text;
    text << in.rdbuf();
    model_ = std::make_shared<selection::AdvisorModel>(selection::AdvisorModel::deserialize(text.str()));
  }
  for (const auto& job : jobs_.list()) {
    if (job.state != JobState::Done) continue;
    for (const auto& r : service::proof_records(job.kind, job.result)) record_proof(r.goal, r.used);
  }
  provers_ = std::make_unique<TaskPool>(config_.task_budget ? config_.task_budget
                                                           : TaskPool::default_size());
  job_workers_ = std::make_unique<TaskPool>(std::max<std::size_t>(config_.job_workers, 1));
}

HammerService::~HammerService() {
  {
    std::lock_guard lock(slot_mutex_);
    for (auto& [id, source] : running_) source.request_stop();
  }
  job_workers_.reset();
  provers_.reset();
}

SnapshotPtr HammerService::snapshot() const {
  std::lock_guard lock(slot_mutex_);
  return snapshot_;
}

ModelPtr HammerService::model() const {
  std::lock_guard lock(slot_mutex_);
  return model_;
}

void HammerService::install_model(ModelPtr model) {
  std::lock_guard lock(slot_mutex_);
  model_ = std::move(model);
}

ArticleUpload HammerService::add_article(std::string_view text) {
  ArticleUpload upload;
  const auto parsed = tptp::parse_article(text);
  upload.article = parsed.header.name;
  for (const auto& d : parsed.diagnostics) upload.diagnostics.push_back(d.to_string());
  if (!parsed.ok()) return upload;

  std::lock_guard lock(slot_mutex_);
  std::vector<std::string> texts;
  bool replaced = false;
  for (const auto& art : snapshot_->articles()) {
    if (art.name == upload.article) {
      texts.emplace_back(text);
      replaced = true;
    } else {
      texts.push_back(snapshot_->render_article(art.name));
    }
  }
  if (!replaced) texts.emplace_back(text);
  try {
    auto next = std::make_shared<const corpus::CorpusSnapshot>(corpus::CorpusSnapshot::load(texts));
    for (const auto& f : next->article(upload.article).facts) upload.facts.push_back(f->id.to_string());
    snapshot_ = std::move(next);
  } catch (const corpus::CorpusError& e) {
    upload.diagnostics = e.diagnostics();
  } catch (const Error& e) {
    upload.diagnostics.emplace_back(e.what());
  }
  return upload;
}

std::vector<Strategy> HammerService::strategies_for(const SolveRequest& request) const {
  if (!request.strategies.empty()) return request.strategies;
  const auto snap = snapshot();
  const auto goal = snap->fact(request.goal);
  auto engine = config_.engine;
  if (request.timeout) engine.time_limit = *request.timeout;
  engine.validate();
  const auto sine = request.sine.value_or(config_.sine);
  sine.validate();
  if (request.mode) return {make_strategy(*goal, *request.mode, engine, sine)};
  return default_strategies(*goal, engine, sine);
}

SolveResult HammerService::solve(const SolveRequest& request, std::stop_token stop) {
  const auto snap = snapshot();
  const auto strategies = strategies_for(request);
  auto result = run_pool(snap, request.goal, strategies, *provers_, runner_, std::move(stop));
  if (result.proved()) record_proof(request.goal, result.used);
  return result;
}

std::string HammerService::submit(JobKind kind, std::string subject,
                                  std::function<nlohmann::json(std::stop_token)> work) {
  const auto job = jobs_.create(kind, std::move(subject));
  std::stop_source source;
  {
    std::lock_guard lock(slot_mutex_);
    running_.emplace(job.id, source);
  }
  job_workers_->submit([this, id = job.id, source, work = std::move(work)] {
    const auto token = source.get_token();
    if (token.stop_requested()) {
      jobs_.advance(id, JobState::Cancelled);
    } else {
      jobs_.advance(id, JobState::Running);
      nlohmann::json result;
      std::string error;
      try {
        result = work(token);
      } catch (const std::exception& e) {
        error = e.what();
        result = {{"error", error}};
      }
      jobs_.advance(id, token.stop_requested() ? JobState::Cancelled : JobState::Done,
                    std::move(result), std::move(error));
    }
    std::lock_guard lock(slot_mutex_);
    running_.erase(id);
  });
  return job.id;
}

std::string HammerService::submit_solve(const SolveRequest& request) {
  auto resolved = request;
  resolved.strategies = strategies_for(request);  // validates goal, limits, mode
  return submit(JobKind::Solve, request.goal.to_string(), [this, resolved](std::stop_token stop) {
    return to_json(solve(resolved, std::move(stop)));
  });
}

std::string HammerService::submit_verify(const std::string& article) {
  snapshot()->article(article);
  return submit(JobKind::Verify, article,
                [this, article](std::stop_token) { return to_json(verify_article(article)); });
}

std::string HammerService::submit_probe(const std::string& article) {
  snapshot()->article(article);
  return submit(JobKind::Probe, article,
                [this, article](std::stop_token) { return to_json(probe(article)); });
}

std::string HammerService::submit_train() {
  return submit(JobKind::Train, "advisor", [this](std::stop_token) { return to_json(train()); });
}

bool HammerService::cancel(const std::string& id) {
  std::lock_guard lock(slot_mutex_);
  auto it = running_.find(id);
  if (it == running_.end()) return false;
  it->second.request_stop();
  return true;
}

VerifyReport HammerService::verify_article(const std::string& article,
                                           std::optional<prover::ProverConfig> config) {
  const auto start = Clock::now();
  const auto snap = snapshot();
  const auto engine = config.value_or(config_.engine);
  VerifyReport report;
  report.article = article;
  std::vector<corpus::FactPtr> goals;
  for (const auto& f : snap->article(article).facts) {
    if (f->status == corpus::FactStatus::Assumed) report.assumed.push_back(f->id.label);
    if (f->status == corpus::FactStatus::Unjustified) report.unjustified.push_back(f->id.label);
    if (f->justification && f->justification->kind == tptp::Justification::Kind::By) goals.push_back(f);
  }
  report.entries.resize(goals.size());
  parallel_for(*provers_, goals.size(), [&](std::size_t i) {
    const auto& goal = *goals[i];
    auto& entry = report.entries[i];
    entry.label = goal.id.label;
    const auto t0 = Clock::now();
    try {
      const auto outcome = runner_(*snap, goal, make_strategy(goal, SliceMode::Kind::ByList, engine, {}), {});
      entry.status = outcome.proof.status();
      entry.used = outcome.proof.used;
      if (outcome.proof.proved()) {
        entry.by_clause = analysis::render_by_clause(*snap, entry.used, article);
      }
    } catch (const std::exception&) {
      entry.status = SzsStatus::Error;
    }
    entry.elapsed = since(t0);
  });
  for (const auto& e : report.entries) {
    if (e.status == SzsStatus::Theorem) record_proof({article, e.label}, e.used);
  }
  report.elapsed = since(start);
  return report;
}

std::vector<selection::Hint> HammerService::hints(const FactId& goal, std::size_t k) const {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  const auto snap = snapshot();
  const auto model = this->model();
  const auto fact = snap->fact(goal);
  std::vector<std::string> candidates;
  for (const auto& f : selection::slice(*snap, goal, SliceMode::imports_only())) {
    if (!f->is_implicit()) candidates.push_back(f->id.to_string());
  }
  return model->advise(tptp::symbol_names(fact->formula), candidates, k);
}

Explanation HammerService::explain(const FactId& goal) {
  const auto snap = snapshot();
  const auto fact = snap->fact(goal);
  if (!fact->justification || fact->justification->kind != tptp::Justification::Kind::By) {
    throw Error(ErrorKind::ContractViolation, goal.to_string() + " has no by justification");
  }
  SolveRequest request;
  request.goal = goal;
  request.mode = SliceMode::Kind::ByList;
  Explanation e;
  e.goal = goal;
  e.solve = solve(request);
  e.outcome = e.solve.proved() ? "Proved" : "Unsolved";
  return e;
}

analysis::ProbeReport HammerService::probe(const std::string& article) {
  return analysis::consistency_probe(*snapshot(), article, config_.engine);
}

TrainSummary HammerService::train() {
  const auto snap = snapshot();
  std::vector<selection::TrainingExample> examples;
  std::set<std::string> facts;
  for (const auto& record : proof_records()) {
    const auto goal = snap->find(record.goal);
    if (!goal) continue;  // article replaced since
    selection::TrainingExample ex;
    ex.goal_symbols = tptp::symbol_names(goal->formula);
    for (const auto& u : record.used) ex.used_facts.insert(u.to_string());
    facts.insert(ex.used_facts.begin(), ex.used_facts.end());
    examples.push_back(std::move(ex));
  }
  auto model = std::make_shared<const selection::AdvisorModel>(selection::AdvisorModel::train(examples));
  if (config_.model) write_file_atomically(*config_.model, model->serialize());
  install_model(model);
  return {examples.size(), facts.size()};
}

std::vector<ProofRecord> HammerService::proof_records() const {
  std::lock_guard lock(slot_mutex_);
  std::vector<ProofRecord> out;
  for (const auto& [goal, used] : proofs_) out.push_back({goal, used});
  return out;
}

void HammerService::record_proof(const FactId& goal, const std::vector<FactId>& used) {
  std::lock_guard lock(slot_mutex_);
  proofs_[goal] = used;
}

std::string HammerService::export_problem(const FactId& goal, SliceMode::Kind mode) const {
  const auto snap = snapshot();
  const auto fact = snap->fact(goal);
  const auto strategy = make_strategy(*fact, mode, config_.engine, config_.sine);
  std::vector<tptp::ProblemFormula> premises;
  for (const auto& f : strategy_premises(*snap, goal, strategy)) {
    premises.push_back({f->id.article, f->id.label, f->formula});
  }
  return tptp::render_problem({goal.article, goal.label, fact->formula}, premises).text;
}

}  // namespace hammer::service
