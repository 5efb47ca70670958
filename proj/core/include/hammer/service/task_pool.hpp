#pragma once

#include <condition_variable>
#include <cstddef>
#include <deque>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hammer::service {

/// Fixed set of worker threads draining a FIFO queue. Bounds how many
/// prover tasks run at once; excess work waits its turn.
class TaskPool {
 public:
  explicit TaskPool(std::size_t threads);
  ~TaskPool();  // finishes queued tasks, then joins

  TaskPool(const TaskPool&) = delete;
  TaskPool& operator=(const TaskPool&) = delete;

  void submit(std::function<void()> task);
  std::size_t size() const { return workers_.size(); }

  /// max(hardware threads, minimum).
  static std::size_t default_size(std::size_t minimum = 4);

 private:
  void work();

  std::mutex mutex_;
  std::condition_variable ready_;
  std::deque<std::function<void()>> queue_;
  bool closing_ = false;
  std::vector<std::thread> workers_;
};

}  // namespace hammer::service
