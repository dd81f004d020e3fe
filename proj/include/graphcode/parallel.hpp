#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace graphcode {

/// 0 means "use the machine's parallelism".
[[nodiscard]] inline int resolve_threads(int requested) noexcept {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(worker, block) for every block in [0, blocks), handing blocks to
/// workers dynamically. The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_blocks(std::uint64_t blocks, int threads, Body&& body) {
  const auto workers = static_cast<std::uint64_t>(std::max(1, resolve_threads(threads)));
  const auto used = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(blocks, 1));
  if (used <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) body(0, b);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(used);
  for (std::uint64_t w = 0; w < used; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t b = next++; b < blocks; b = next++) body(static_cast<int>(w), b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = blocks;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace graphcode
