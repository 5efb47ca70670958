#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hammer/prover/prove.hpp"
#include "hammer/selection/sine.hpp"

namespace hammer::service {

struct ServiceConfig {
  std::string corpus;                  // directory or snapshot file
  std::optional<std::string> job_log;  // append-only JSON lines
  std::optional<std::string> model;    // advisor model file
  prover::ProverConfig engine;         // default limits and engine
  selection::SineParams sine;
  std::vector<prover::ExternalProver> external;
  std::size_t task_budget = 0;  // concurrent prover tasks; 0 = automatic
  std::size_t job_workers = 4;  // concurrent jobs

  /// JSON object; unknown keys are rejected. `engine` names an entry of
  /// `external_provers` or is `builtin`.
  static ServiceConfig parse(std::string_view json_text);
  static ServiceConfig load(const std::string& path);
};

}  // namespace hammer::service
