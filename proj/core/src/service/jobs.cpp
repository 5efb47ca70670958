#include "hammer/service/jobs.hpp"

#include <random>

#include "hammer/error.hpp"

namespace hammer::service {

namespace {

int rank(JobState s) {
  switch (s) {
    case JobState::Queued: return 0;
    case JobState::Running: return 1;
    case JobState::Done:
    case JobState::Cancelled: return 2;
  }
  return 0;
}

std::int64_t to_millis(Job::Time t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
}

Job::Time from_millis(std::int64_t ms) { return Job::Time(std::chrono::milliseconds(ms)); }

}  // namespace

std::string_view to_string(JobKind kind) {
  switch (kind) {
    case JobKind::Solve: return "solve";
    case JobKind::Verify: return "verify";
    case JobKind::Probe: return "probe";
    case JobKind::Train: return "train";
  }
  return "solve";
}

std::string_view to_string(JobState state) {
  switch (state) {
    case JobState::Queued: return "queued";
    case JobState::Running: return "running";
    case JobState::Done: return "done";
    case JobState::Cancelled: return "cancelled";
  }
  return "queued";
}

JobKind job_kind_from_string(std::string_view text) {
  for (auto k : {JobKind::Solve, JobKind::Verify, JobKind::Probe, JobKind::Train}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown job kind " + std::string(text));
}

JobState job_state_from_string(std::string_view text) {
  for (auto s : {JobState::Queued, JobState::Running, JobState::Done, JobState::Cancelled}) {
    if (to_string(s) == text) return s;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown job state " + std::string(text));
}

std::string random_job_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id(16, '0');
  auto bits = rng();
  for (auto& c : id) {
    c = kHex[bits & 0xF];
    bits >>= 4;
  }
  return id;
}

JobTable::JobTable(std::optional<std::string> log_path) : log_path_(std::move(log_path)) {
  if (!log_path_) return;
  replay(*log_path_);
  log_.open(*log_path_, std::ios::app);
  if (!log_) throw Error(ErrorKind::Io, "cannot open job log " + *log_path_);
  for (auto& [id, job] : jobs_) {
    if (job.terminal()) continue;
    job.state = JobState::Cancelled;
    job.error = "interrupted by restart";
    job.finished = std::chrono::system_clock::now();
    append(job);
  }
}

void JobTable::replay(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      continue;  // a torn final line after a crash
    }
    Job job;
    job.id = j.at("id").get<std::string>();
    job.kind = job_kind_from_string(j.at("kind").get<std::string>());
    job.state = job_state_from_string(j.at("state").get<std::string>());
    job.subject = j.value("subject", "");
    job.result = j.value("result", nlohmann::json());
    job.error = j.value("error", "");
    job.created = from_millis(j.value<std::int64_t>("created", 0));
    if (j.contains("started")) job.started = from_millis(j["started"].get<std::int64_t>());
    if (j.contains("finished")) job.finished = from_millis(j["finished"].get<std::int64_t>());
    jobs_[job.id] = std::move(job);
  }
}

void JobTable::append(const Job& job) {
  if (!log_.is_open()) return;
  nlohmann::json j = {{"id", job.id},
                      {"kind", to_string(job.kind)},
                      {"state", to_string(job.state)},
                      {"subject", job.subject},
                      {"created", to_millis(job.created)}};
  if (job.started) j["started"] = to_millis(*job.started);
  if (job.finished) j["finished"] = to_millis(*job.finished);
  if (!job.result.is_null()) j["result"] = job.result;
  if (!job.error.empty()) j["error"] = job.error;
  log_ << j.dump() << '\n';
  log_.flush();
}

Job JobTable::create(JobKind kind, std::string subject) {
  std::lock_guard lock(mutex_);
  Job job;
  do {
    job.id = random_job_id();
  } while (jobs_.contains(job.id));
  job.kind = kind;
  job.subject = std::move(subject);
  job.created = std::chrono::system_clock::now();
  jobs_[job.id] = job;
  append(job);
  return job;
}

bool JobTable::advance(const std::string& id, JobState state, nlohmann::json result,
                       std::string error) {
  {
    std::lock_guard lock(mutex_);
    auto it = jobs_.find(id);
    if (it == jobs_.end() || rank(state) <= rank(it->second.state)) return false;
    auto& job = it->second;
    job.state = state;
    const auto now = std::chrono::system_clock::now();
    if (state == JobState::Running) job.started = now;
    if (job.terminal()) job.finished = now;
    if (!result.is_null()) job.result = std::move(result);
    if (!error.empty()) job.error = std::move(error);
    append(job);
  }
  changed_.notify_all();
  return true;
}

std::optional<Job> JobTable::get(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return std::nullopt;
  return it->second;
}

std::vector<Job> JobTable::list() const {
  std::lock_guard lock(mutex_);
  std::vector<Job> out;
  for (const auto& [id, job] : jobs_) out.push_back(job);
  return out;
}

std::optional<Job> JobTable::wait(const std::string& id, std::chrono::milliseconds timeout) const {
  std::unique_lock lock(mutex_);
  changed_.wait_for(lock, timeout, [&] {
    auto it = jobs_.find(id);
    return it == jobs_.end() || it->second.terminal();
  });
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return std::nullopt;
  return it->second;
}

}  // namespace hammer::service
