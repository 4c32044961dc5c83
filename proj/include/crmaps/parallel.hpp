#ifndef CRMAPS_PARALLEL_HPP
#define CRMAPS_PARALLEL_HPP

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace crmaps {

/// Worker cap: CRMAPS_THREADS when set (>= 1), otherwise all cores.
inline unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("CRMAPS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return hw;
}

/// Runs fn(i) for i in [0, n) across at most thread_budget() threads.
/// Callers keep determinism by writing results into per-index slots; the
/// strided split itself carries no ordering guarantees.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_budget(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  for (std::thread& t : pool) t.join();
}

}  // namespace crmaps

#endif  // CRMAPS_PARALLEL_HPP
