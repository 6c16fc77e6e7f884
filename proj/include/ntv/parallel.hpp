#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ntv {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads and returns the
/// results in index order. The first exception thrown by any task is
/// rethrown after all workers join.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<Result> results(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> workers;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    for (unsigned w = 0; w < n; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            results[i] = fn(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
            return;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace ntv
