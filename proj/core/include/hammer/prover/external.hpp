#pragma once

#include <chrono>
#include <stop_token>
#include <string>
#include <string_view>

#include "hammer/tptp/szs.hpp"

namespace hammer::prover {

/// An SZS-speaking prover run through `/bin/sh -c`. The command template
/// may use `{problem}` (path of a temporary problem file) and `{timeout_s}`
/// (the limit in whole seconds, rounded up).
struct ExternalProver {
  std::string name;
  std::string command;
};

struct ExternalRun {
  tptp::SzsVerdict verdict;
  std::string output;  // stdout and stderr, interleaved
  int exit_code = -1;  // -1 when killed or never started
  bool killed = false;
  std::chrono::milliseconds elapsed{0};
};

/// Fills in the command template.
std::string expand_command(std::string_view command, std::string_view problem_path,
                           std::chrono::milliseconds limit);

/// Runs the prover on `problem` in its own process group. The group is
/// killed with SIGKILL when the wall-clock limit passes (verdict Timeout) or
/// `stop` is requested (verdict GaveUp); both are noticed within ~10 ms.
/// A run without an SZS line gives verdict Error with an output excerpt.
ExternalRun run_external(const ExternalProver& prover, std::string_view problem,
                         std::chrono::milliseconds limit, std::stop_token stop = {});

}  // namespace hammer::prover
