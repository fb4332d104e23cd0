#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace trimoduli {

/// Worker count: TRIMODULI_THREADS when set (a positive integer), otherwise
/// the hardware concurrency. Results never depend on this value.
auto worker_count() -> std::size_t;

/// Runs task(index, worker) for every index in [0, count) on up to `workers`
/// threads. Indices are handed out dynamically, so callers must not let the
/// result depend on which worker ran which index.
template <typename Task> void parallel_for(std::size_t count, std::size_t workers, Task &&task) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i, std::size_t{0});
    return;
  }
  workers = std::min(workers, count);
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(i, w);
    });
}

} // namespace trimoduli
