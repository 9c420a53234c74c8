#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace alphadg {

inline int default_workers() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Splits [0, total) into contiguous ranges of `chunk` codes and evaluates
// fn(begin, end) for each on up to `workers` threads. Results come back in
// range order regardless of scheduling, so any fold over them is
// deterministic. The first exception (in range order) is rethrown.
template <class Partial, class Fn>
std::vector<Partial> map_ranges(std::uint64_t total, std::uint64_t chunk, int workers, Fn&& fn) {
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t ranges = (total + chunk - 1) / chunk;
  std::vector<Partial> out(ranges);
  std::vector<std::exception_ptr> errors(ranges);
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    for (std::uint64_t r = next.fetch_add(1); r < ranges; r = next.fetch_add(1)) {
      const std::uint64_t begin = r * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      try {
        out[r] = fn(begin, end);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };

  const int threads = static_cast<int>(std::min<std::uint64_t>(std::max(workers, 1), ranges));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace alphadg
