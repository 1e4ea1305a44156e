#ifndef WBOSON_UTIL_HPP
#define WBOSON_UTIL_HPP

#include <thread>
#include <vector>

namespace wb {

// Runs f(i) for i in [0, n). With jobs > 1 the indices are processed by a
// fixed chunked assignment; each index must be independent, so results are
// identical for every worker count.
template <class F>
void parallelFor(long n, int jobs, F&& f) {
  if (jobs <= 1 || n < 2) {
    for (long i = 0; i < n; ++i) f(i);
    return;
  }
  long workers = std::min<long>(jobs, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (long w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (long i = w; i < n; i += workers) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace wb

#endif
