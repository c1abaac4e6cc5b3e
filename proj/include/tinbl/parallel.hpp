#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace tinbl {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, n) into contiguous chunks, runs fn(begin, end) for each chunk on
/// its own thread and returns the per-chunk results in chunk order. Callers
/// merge the results, so the outcome is independent of the chunking as long
/// as the merge is exact.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::uint64_t n, unsigned threads, Fn fn) {
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), n));
  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = fn(std::uint64_t{0}, n);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = n * c / chunks;
    const std::uint64_t end = n * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      try {
        results[c] = fn(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace tinbl
