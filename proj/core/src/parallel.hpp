#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "avd/oracle.hpp"

namespace avd::detail {

/// Runs fn(row) for every row in [0, rows). Each row must write only its own
/// output slots, which keeps results independent of scheduling.
template <typename Fn>
void parallel_rows(int rows, Fn&& fn) {
  const int workers = std::min(worker_count(), rows);
  if (workers <= 1) {
    for (int r = 0; r < rows; ++r) fn(r);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int r = next.fetch_add(1); r < rows; r = next.fetch_add(1)) fn(r);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace avd::detail
