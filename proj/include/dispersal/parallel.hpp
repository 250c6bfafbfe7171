#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dispersal {

/// Worker cap: DISPERSAL_THREADS when set (>= 1), else hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("DISPERSAL_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for every i in [begin, end), fanning out to at most
/// max_workers threads (0 = worker_count()). Indices are claimed through a
/// shared counter; fn must only write to slots owned by its index, which
/// keeps results identical to the sequential order. The first exception
/// thrown by any fn is rethrown in the caller.
template <typename Fn>
void parallel_for(int begin, int end, Fn&& fn, int max_workers = 0) {
  const int items = end - begin;
  if (items <= 0) return;
  int workers = max_workers > 0 ? max_workers : worker_count();
  workers = std::min(workers, items);
  if (workers <= 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }

  std::atomic<int> next{begin};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::atomic<bool> stop{false};

  auto body = [&] {
    try {
      for (;;) {
        if (stop.load(std::memory_order_relaxed)) return;
        int i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= end) return;
        fn(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      stop.store(true, std::memory_order_relaxed);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 0; t < workers - 1; ++t) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace dispersal
