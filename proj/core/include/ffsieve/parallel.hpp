#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ffsieve {

/// Worker threads used by for_each_chunk. 0 selects std::thread::hardware_concurrency().
void set_worker_count(unsigned n);
unsigned worker_count();

/// Number of chunks used for partitioned reductions. Fixed, so results do not depend on
/// the worker count.
inline constexpr std::size_t kReductionChunks = 64;

/// Runs fn(i) for every i in [0, chunks). Chunks are claimed dynamically by the workers;
/// callers write into per-chunk slots and reduce them in index order afterwards. The
/// exception from the lowest failing chunk is rethrown.
template <class Fn>
void for_each_chunk(std::size_t chunks, Fn&& fn) {
  const std::size_t threads = std::min<std::size_t>(worker_count(), chunks);
  if (threads <= 1) {
    for (std::size_t i = 0; i < chunks; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(chunks);
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < chunks;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ffsieve
