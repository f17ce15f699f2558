#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace sahi {

// Thread budget: SAHI_KERNELS_THREADS caps it, hardware concurrency is the
// default. Always at least 1.
inline int max_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  int n = hw ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("SAHI_KERNELS_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

// Runs f(chunk_index, begin, end) over fixed-size chunks of [0, count).
// Chunk boundaries do not depend on the thread count, so any per-chunk
// results the caller combines in chunk order are deterministic.
inline void parallel_chunks(long count, long chunk,
                            const std::function<void(long, long, long)>& f) {
  if (count <= 0) return;
  long nchunks = (count + chunk - 1) / chunk;
  int nthreads = max_threads();
  if (nthreads <= 1 || nchunks <= 1) {
    for (long c = 0; c < nchunks; ++c)
      f(c, c * chunk, std::min(count, (c + 1) * chunk));
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<long> next{0};
  for (int t = 0; t < std::min<long>(nthreads, nchunks); ++t) {
    pool.emplace_back([&] {
      for (;;) {
        long c = next.fetch_add(1);
        if (c >= nchunks) return;
        f(c, c * chunk, std::min(count, (c + 1) * chunk));
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace sahi
