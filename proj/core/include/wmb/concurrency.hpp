#pragma once

// Deterministic parallel helpers. Work items are computed by a pool of
// threads but always gathered and reduced in index order, so results are
// bit-identical regardless of the thread count.

#include <functional>
#include <vector>

namespace wmb {

// Global worker cap. 0 means hardware concurrency. Reads the WMB_THREADS
// environment variable on first use.
void set_max_threads(int n);
int max_threads();

// Evaluates fn(i) for i in [0, n) and returns the results in index order.
// Nested calls run serially on the caller thread.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn);

namespace detail {
void parallel_run(std::size_t n, const std::function<void(std::size_t)>& fn);
}

template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  detail::parallel_run(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace wmb
