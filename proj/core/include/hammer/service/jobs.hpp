#pragma once

#include <chrono>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hammer::service {

enum class JobKind { Solve, Verify, Probe, Train };
enum class JobState { Queued, Running, Done, Cancelled };

std::string_view to_string(JobKind kind);
std::string_view to_string(JobState state);
JobKind job_kind_from_string(std::string_view text);
JobState job_state_from_string(std::string_view text);

struct Job {
  using Time = std::chrono::system_clock::time_point;

  std::string id;
  JobKind kind = JobKind::Solve;
  JobState state = JobState::Queued;
  std::string subject;     // goal or article the job is about
  nlohmann::json result;   // null until done
  std::string error;
  Time created{};
  std::optional<Time> started;
  std::optional<Time> finished;

  bool terminal() const { return state == JobState::Done || state == JobState::Cancelled; }
};

/// Thread-safe job registry. Every state change is appended to the log as
/// one JSON line, so a new table built on the same file sees earlier jobs;
/// jobs that were still queued or running are then marked cancelled.
class JobTable {
 public:
  explicit JobTable(std::optional<std::string> log_path = std::nullopt);

  Job create(JobKind kind, std::string subject);

  /// Moves a job forward (queued -> running -> done | cancelled). Returns
  /// false, changing nothing, for unknown ids or backward moves.
  bool advance(const std::string& id, JobState state, nlohmann::json result = nullptr,
               std::string error = {});

  std::optional<Job> get(const std::string& id) const;
  std::vector<Job> list() const;

  /// Waits until the job is terminal or the timeout passes.
  std::optional<Job> wait(const std::string& id, std::chrono::milliseconds timeout) const;

 private:
  void append(const Job& job);
  void replay(const std::string& path);

  mutable std::mutex mutex_;
  mutable std::condition_variable changed_;
  std::map<std::string, Job> jobs_;
  std::optional<std::string> log_path_;
  std::ofstream log_;
};

std::string random_job_id();

}  // namespace hammer::service
