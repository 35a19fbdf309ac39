#ifndef MVK_PARALLEL_HPP
#define MVK_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mvk {

// Runs fn(i) for i in [begin, end) on up to `jobs` threads.  Callers write to
// disjoint preallocated slots, so results do not depend on the worker count.
template <class Fn>
void parallel_for(int begin, int end, int jobs, Fn&& fn) {
  const int count = end - begin;
  if (count <= 0) return;
  jobs = std::clamp(jobs, 1, count);
  if (jobs == 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<int> next{begin};
  std::mutex err_mutex;
  std::exception_ptr err;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&] {
      try {
        while (true) {
          int i = next.fetch_add(1);
          if (i >= end) break;
          fn(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace mvk

#endif
