#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace zdyn::detail {

inline unsigned resolve_workers(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// out[i] = f(i) for i in [0, count), split into contiguous blocks. The first
/// exception thrown by any worker is rethrown on the caller's thread.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, unsigned workers, F&& f) {
  std::vector<R> out(count);
  workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (workers <= 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  // interleaved blocks keep the load even when cost grows with |n|
  constexpr std::size_t block = 256;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t start = w * block; start < count; start += workers * block) {
          const std::size_t stop = std::min(count, start + block);
          for (std::size_t i = start; i < stop; ++i) out[i] = f(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace zdyn::detail
