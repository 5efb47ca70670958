#include "hammer/prover/external.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hammer/error.hpp"

namespace hammer::prover {

namespace {

std::string shell_quote(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += '\'';
  return out;
}

void replace_all(std::string& text, std::string_view from, const std::string& to) {
  for (auto at = text.find(from); at != std::string::npos; at = text.find(from, at + to.size())) {
    text.replace(at, from.size(), to);
  }
}

class TempFile {
 public:
  explicit TempFile(std::string_view contents) {
    auto pattern = (std::filesystem::temp_directory_path() / "hammer-XXXXXX.p").string();
    const int fd = ::mkstemps(pattern.data(), 2);
    if (fd < 0) throw Error(ErrorKind::Io, "cannot create temporary problem file");
    ::close(fd);
    path_ = pattern;
    std::ofstream(path_, std::ios::binary) << contents;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string excerpt(std::string_view output) {
  constexpr std::size_t kMax = 400;
  if (output.size() <= kMax) return std::string(output);
  return std::string(output.substr(0, kMax)) + "...";
}

}  // namespace

std::string expand_command(std::string_view command, std::string_view problem_path,
                           std::chrono::milliseconds limit) {
  std::string out(command);
  const auto seconds = std::max<long long>(1, (limit.count() + 999) / 1000);
  replace_all(out, "{problem}", shell_quote(problem_path));
  replace_all(out, "{timeout_s}", std::to_string(seconds));
  return out;
}

ExternalRun run_external(const ExternalProver& prover, std::string_view problem,
                         std::chrono::milliseconds limit, std::stop_token stop) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  ExternalRun run;
  TempFile file(problem);
  const std::string command = expand_command(prover.command, file.path(), limit);

  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0) throw Error(ErrorKind::Io, "pipe failed");
  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    run.verdict.status = tptp::SzsStatus::Error;
    run.verdict.excerpt = "spawn failure: fork failed";
    return run;
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(fds[1], STDOUT_FILENO);
    ::dup2(fds[1], STDERR_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);  // close the race with the child's own call
  ::close(fds[1]);
  ::fcntl(fds[0], F_SETFL, O_NONBLOCK);

  const auto deadline = start + limit;
  enum class Ending { Exited, Timeout, Cancelled } ending = Ending::Exited;
  std::array<char, 4096> buffer{};
  bool open = true;
  int status = 0;
  bool reaped = false;
  while (open || !reaped) {
    if (stop.stop_requested()) {
      ending = Ending::Cancelled;
      break;
    }
    if (clock::now() >= deadline) {
      ending = Ending::Timeout;
      break;
    }
    if (open) {
      pollfd p{fds[0], POLLIN, 0};
      ::poll(&p, 1, 10);
      for (;;) {
        const auto n = ::read(fds[0], buffer.data(), buffer.size());
        if (n > 0) {
          run.output.append(buffer.data(), static_cast<std::size_t>(n));
        } else {
          if (n == 0) open = false;
          break;
        }
      }
    } else {
      ::usleep(5000);
    }
    if (!reaped && ::waitpid(pid, &status, WNOHANG) == pid) reaped = true;
  }
  if (ending != Ending::Exited) {
    ::kill(-pid, SIGKILL);  // the whole group, grandchildren included
    run.killed = true;
  }
  if (!reaped) {
    ::waitpid(pid, &status, 0);
  } else if (WIFEXITED(status)) {
    run.exit_code = WEXITSTATUS(status);
  }
  ::close(fds[0]);
  run.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start);

  if (ending == Ending::Timeout) {
    run.verdict.status = tptp::SzsStatus::Timeout;
    return run;
  }
  if (ending == Ending::Cancelled) {
    run.verdict.status = tptp::SzsStatus::GaveUp;
    return run;
  }
  run.verdict = tptp::parse_prover_output(run.output, tptp::OutputDialect::Tstp);
  if (run.exit_code == 127 && run.verdict.status == tptp::SzsStatus::Error) {
    run.verdict.excerpt = "spawn failure: " + excerpt(run.output);
  }
  return run;
}

}  // namespace hammer::prover
