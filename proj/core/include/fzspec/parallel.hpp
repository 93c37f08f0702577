#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fz {

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Splits [0, count) into contiguous chunks, one per worker, and runs
// body(begin, end, chunk_index) for each. Callers merge per-chunk results in
// chunk order so that output does not depend on the worker count.
inline void run_chunked(std::size_t count, int workers,
                        const std::function<void(std::size_t, std::size_t, int)>& body) {
  workers = resolve_workers(workers);
  if (workers == 1 || count <= 1) {
    if (count > 0) body(0, count, 0);
    return;
  }
  std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  std::size_t per = count / chunks;
  std::size_t extra = count % chunks;
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  std::exception_ptr first_error;
  std::mutex error_mu;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t len = per + (c < extra ? 1 : 0);
    std::size_t end = begin + len;
    threads.emplace_back([&, begin, end, c]() {
      try {
        body(begin, end, static_cast<int>(c));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
    begin = end;
  }
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fz
