#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ffdinfo {

// Worker count resolution: explicit request > FFDINFO_THREADS > hardware.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FFDINFO_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, count). Work is handed out in fixed-size chunks;
// callers that write results into slot i (or seed RNG streams by i) get
// output independent of the thread count.
inline void parallel_for(std::int64_t count, int threads,
                         const std::function<void(std::int64_t)>& fn) {
  threads = resolve_threads(threads);
  if (threads <= 1 || count < 2) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::int64_t chunk = std::max<std::int64_t>(1, count / (threads * 16));
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::int64_t begin = next.fetch_add(chunk);
      if (begin >= count) return;
      std::int64_t end = std::min(count, begin + chunk);
      for (std::int64_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace ffdinfo
