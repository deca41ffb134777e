#include "hg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace hg {

namespace {
int g_threads = 1;
}

void set_threads(int k) { g_threads = std::max(1, k); }
int threads() { return g_threads; }

void parallel_for(int n, const std::function<void(int)>& fn) {
  int k = std::min(g_threads, n);
  if (k <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < k; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) fn(i);
    });
}

}  // namespace hg
