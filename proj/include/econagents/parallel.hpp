#ifndef ECONAGENTS_PARALLEL_HPP
#define ECONAGENTS_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace econagents {

// Runs fn(i) for i in [0, n) on up to `workers` threads. Callers own all
// output slots by index, so results are deterministic regardless of
// scheduling. workers <= 1 degrades to a plain loop.
inline void parallel_for_indexed(std::size_t n, unsigned workers,
                                 const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 4;
  unsigned k = workers == 0 ? 1 : std::min<unsigned>(workers, std::min<std::size_t>(n, hw));
  if (k <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(k);
  for (unsigned t = 0; t < k; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace econagents

#endif
