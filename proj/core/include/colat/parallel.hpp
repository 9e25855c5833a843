#pragma once

// Deterministic task-parallel helpers. Tasks are indexed 0..count-1 and
// handed out in increasing order; results never depend on the worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace colat {

struct Parallelism {
  unsigned workers = 1;
};

namespace detail {

template <class Body>
void run_workers(unsigned workers, std::size_t tasks, Body&& body) {
  unsigned n = std::max(1u, workers);
  if (tasks < n) n = static_cast<unsigned>(std::max<std::size_t>(tasks, 1));
  if (n == 1) {
    body();
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> threads;
  threads.reserve(n);
  for (unsigned w = 0; w < n; ++w) {
    threads.emplace_back([&] {
      try {
        body();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  threads.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// Runs fn(i) for every i in [0, count).
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  detail::run_workers(workers, count, [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  });
}

/// Returns the least i in [0, count) for which fn(i) is true, if any.
/// Tasks above the best index found so far are skipped.
template <class Fn>
std::optional<std::size_t> parallel_first(std::size_t count, unsigned workers,
                                          Fn&& fn) {
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{none};
  detail::run_workers(workers, count, [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      if (i > best.load(std::memory_order_relaxed)) continue;
      if (fn(i)) {
        std::size_t current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
      }
    }
  });
  std::size_t found = best.load();
  if (found == none) return std::nullopt;
  return found;
}

}  // namespace colat
