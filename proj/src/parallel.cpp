#include "kappa1/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>

namespace kappa1 {

unsigned resolve_worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KAPPA1_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

namespace detail {

void run_chunked(std::uint64_t chunk_count, unsigned workers,
                 const std::function<void(std::uint64_t, unsigned)>& body) {
  if (workers > chunk_count) workers = static_cast<unsigned>(chunk_count);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      while (true) {
        std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= chunk_count || failed.load(std::memory_order_relaxed)) return;
        try {
          body(c, w);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true, std::memory_order_relaxed);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

}  // namespace kappa1
