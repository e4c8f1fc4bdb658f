#include "rcbf/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace rcbf {

namespace {
thread_local bool g_inside_worker = false;
}

std::size_t worker_count() {
  static const std::size_t n = [] {
    if (const char* env = std::getenv("RCBF_WORKERS")) {
      const long v = std::atol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<std::size_t>(hw > 0 ? hw : 1);
  }();
  return n;
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  if (begin >= end) return;
  const std::size_t n = end - begin;
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1 || g_inside_worker) {
    fn(begin, end);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    if (lo >= end) break;
    const std::size_t hi = std::min(end, lo + chunk);
    threads.emplace_back([&fn, lo, hi] {
      g_inside_worker = true;
      fn(lo, hi);
      g_inside_worker = false;
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace rcbf
