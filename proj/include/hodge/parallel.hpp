#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hodge {

/// Worker count from HODGE_THREADS; single-threaded when unset or invalid.
inline unsigned worker_count() {
  const char* env = std::getenv("HODGE_THREADS");
  if (env == nullptr) return 1;
  try {
    long v = std::stol(env);
    return v >= 1 ? static_cast<unsigned>(v) : 1u;
  } catch (...) {
    return 1;
  }
}

/**
 * Runs fn(begin, end, partial) over [0, n) split into contiguous blocks and
 * returns the per-block partial results in block order, so reductions are
 * independent of the worker count.
 */
template <typename Partial, typename Fn>
std::vector<Partial> parallel_blocks(std::size_t n, unsigned workers, Fn&& fn) {
  if (workers <= 1 || n < 2) {
    std::vector<Partial> out(1);
    fn(std::size_t{0}, n, out[0]);
    return out;
  }
  const std::size_t blocks = std::min<std::size_t>(workers, n);
  std::vector<Partial> out(blocks);
  std::vector<std::exception_ptr> errors(blocks);
  std::vector<std::thread> pool;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = n * b / blocks, hi = n * (b + 1) / blocks;
    pool.emplace_back([&, lo, hi, b] {
      try {
        fn(lo, hi, out[b]);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hodge
