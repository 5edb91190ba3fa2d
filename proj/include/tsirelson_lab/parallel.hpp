#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace tsirelson_lab {

/// Worker count: TSIRELSON_LAB_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
std::size_t thread_cap();

/// out[i] = fn(i) for i < n. Results land in index order whatever the
/// schedule; the first exception (by index) is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(thread_cap(), n);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace tsirelson_lab
