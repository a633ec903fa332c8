#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tt2 {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into fixed blocks of `block` items and hands each block
/// to `fn(begin, end, block_index)`. Block boundaries depend only on `count`
/// and `block`, never on the thread count, so per-block reductions combined
/// in block order are deterministic.
template <class Fn>
void for_each_block(std::size_t count, std::size_t block, unsigned threads, Fn&& fn) {
  if (count == 0) return;
  const std::size_t blocks = (count + block - 1) / block;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), blocks));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b)
      fn(b * block, std::min(count, (b + 1) * block), b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      for (std::size_t b = next++; b < blocks; b = next++)
        fn(b * block, std::min(count, (b + 1) * block), b);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = blocks;
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace tt2
