#include "bplab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace bplab {

int thread_budget() {
  static const int budget = [] {
    if (const char* env = std::getenv("BPLAB_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v >= 1) return static_cast<int>(v);
      return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }();
  return budget;
}

void parallel_streams(int streams, const std::function<void(int)>& body) {
  int workers = std::min(streams, thread_budget());
  if (workers <= 1) {
    for (int s = 0; s < streams; ++s) body(s);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int s = next.fetch_add(1); s < streams; s = next.fetch_add(1)) body(s);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace bplab
