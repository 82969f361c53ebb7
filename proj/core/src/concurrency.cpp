#include "wmb/concurrency.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace wmb {

namespace {

std::atomic<int> g_max_threads{-1};
thread_local bool tl_in_parallel_region = false;

int resolve_threads() {
  int n = g_max_threads.load();
  if (n < 0) {
    n = 0;
    if (const char* env = std::getenv("WMB_THREADS")) n = std::atoi(env);
    g_max_threads.store(n);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return n > 0 ? n : 1;
}

}  // namespace

void set_max_threads(int n) { g_max_threads.store(n); }

int max_threads() { return resolve_threads(); }

namespace detail {

void parallel_run(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int workers = resolve_threads();
  if (n == 0) return;
  if (workers <= 1 || n == 1 || tl_in_parallel_region) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto body = [&] {
    tl_in_parallel_region = true;
    try {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
    tl_in_parallel_region = false;
  };

  std::vector<std::thread> pool;
  const std::size_t spawn = std::min<std::size_t>(workers, n) - 1;
  pool.reserve(spawn);
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

}  // namespace wmb
