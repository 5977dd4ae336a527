#pragma once

// Chunked fan-out over an inclusive integer range. Workers pull contiguous
// chunks from an atomic counter and write into per-chunk slots owned by the
// caller, so merged results never depend on scheduling.

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace rrsap {

inline int resolve_thread_count(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

inline std::int64_t chunk_count(std::int64_t from, std::int64_t to, std::int64_t chunk_size) {
  return (to - from + chunk_size) / chunk_size;
}

// fn(chunk_index, lo, hi) with [lo, hi] inclusive; chunk 0 starts at `from`.
// The first exception thrown (lowest chunk index) is rethrown after join.
template <typename Fn>
void parallel_chunks(std::int64_t from, std::int64_t to, std::int64_t chunk_size, int threads,
                     Fn&& fn) {
  if (from > to) return;
  const std::int64_t chunks = chunk_count(from, to, chunk_size);
  const int workers = static_cast<int>(
      std::min<std::int64_t>(resolve_thread_count(threads), chunks));
  if (workers <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::int64_t lo = from + c * chunk_size;
      const std::int64_t hi = std::min(to, lo + chunk_size - 1);
      fn(c, lo, hi);
    }
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
  auto run = [&]() {
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::int64_t lo = from + c * chunk_size;
      const std::int64_t hi = std::min(to, lo + chunk_size - 1);
      try {
        fn(c, lo, hi);
      } catch (...) {
        errors[static_cast<std::size_t>(c)] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace rrsap
