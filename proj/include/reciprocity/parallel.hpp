#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace reciprocity {

/// Worker count for internal scans. RECIPROCITY_THREADS caps it; the default is
/// the hardware concurrency. Results never depend on this value.
inline unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RECIPROCITY_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 1024));
    } catch (...) {
    }
  }
  return hw;
}

/// Sums body(i) over i in [lo, hi], split into contiguous chunks across
/// threads. Partial results are combined in chunk order.
template <typename T, typename Body>
T parallel_sum(std::int64_t lo, std::int64_t hi, Body body, unsigned min_chunk = 4) {
  if (hi < lo) return T{};
  const std::int64_t n = hi - lo + 1;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::int64_t>(thread_count(), std::max<std::int64_t>(1, n / min_chunk)));
  if (workers <= 1) {
    T acc{};
    for (std::int64_t i = lo; i <= hi; ++i) acc += body(i);
    return acc;
  }
  std::vector<T> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::int64_t a = lo + n * w / workers;
    const std::int64_t b = lo + n * (w + 1) / workers - 1;
    pool.emplace_back([&, a, b, w] {
      T acc{};
      for (std::int64_t i = a; i <= b; ++i) acc += body(i);
      partial[w] = std::move(acc);
    });
  }
  for (auto& th : pool) th.join();
  T total{};
  for (auto& p : partial) total += p;
  return total;
}

}  // namespace reciprocity
