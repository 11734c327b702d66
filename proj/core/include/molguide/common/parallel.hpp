//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_COMMON_PARALLEL_HPP_
#define MOLGUIDE_COMMON_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace molguide {

// 0 means "one per hardware thread".
inline std::size_t resolve_workers(std::size_t requested, std::size_t items) {
  std::size_t w = requested;
  if (w == 0)
    w = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(w, items));
}

/// Calls fn(i) for i in [0, count) split over contiguous chunks. Each index
/// is processed exactly once and results written by index are independent of
/// the worker count. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for(std::size_t count, Fn &&fn, std::size_t workers = 0) {
  if (count == 0)
    return;
  workers = resolve_workers(workers, count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end)
      break;
    threads.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i)
          fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    });
  }
  for (auto &t: threads)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

} // namespace molguide

#endif // MOLGUIDE_COMMON_PARALLEL_HPP_
