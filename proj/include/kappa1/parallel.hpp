#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace kappa1 {

// Worker-count policy: explicit request wins, then KAPPA1_THREADS, then
// hardware_concurrency(); the result is always >= 1.
unsigned resolve_worker_count(unsigned requested = 0);

namespace detail {

void run_chunked(std::uint64_t chunk_count, unsigned workers,
                 const std::function<void(std::uint64_t, unsigned)>& body);

}  // namespace detail

// Splits [0, count) into fixed chunks, maps each, and folds the per-chunk
// results in chunk order. The fold order is independent of scheduling, so
// any associative `reduce` yields deterministic results.
template <typename Result, typename Map, typename Reduce>
Result parallel_chunk_reduce(std::uint64_t chunk_count, Result identity, Map map,
                             Reduce reduce, unsigned workers = 0) {
  unsigned n = resolve_worker_count(workers);
  if (chunk_count == 0) return identity;
  if (n <= 1 || chunk_count == 1) {
    Result acc = identity;
    for (std::uint64_t c = 0; c < chunk_count; ++c) acc = reduce(std::move(acc), map(c));
    return acc;
  }
  std::vector<Result> partial(static_cast<std::size_t>(chunk_count), identity);
  detail::run_chunked(chunk_count, n, [&](std::uint64_t c, unsigned) {
    partial[static_cast<std::size_t>(c)] = map(c);
  });
  Result acc = identity;
  for (auto& p : partial) acc = reduce(std::move(acc), std::move(p));
  return acc;
}

}  // namespace kappa1
