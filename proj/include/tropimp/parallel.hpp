#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace tropimp {

// Runs body(i) for i in [0, n); with threads > 1 the iterations are spread
// over a small pool. Callers write results into index-addressed slots, so
// output never depends on the thread count.
template <class F>
void parallel_for(int n, int threads, F&& body) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  const int pool_size = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(pool_size);
  for (int t = 0; t < pool_size; ++t) {
    pool.emplace_back([&] {
      int i;
      while ((i = next.fetch_add(1)) < n) {
        if (failed.load()) return;
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace tropimp
