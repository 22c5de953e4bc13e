#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace entlab {

inline int default_thread_count() {
  if (const char* env = std::getenv("ENTLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Evaluates f(i) for i in [0, count) on up to `threads` workers and
// returns the results in index order, so the output is independent of the
// worker count. f must be safe to call concurrently.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, int threads, F&& f) {
  std::vector<std::optional<T>> slots(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(f(i));
  } else {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) {
            slots[i].emplace(f(i));
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<T> results;
  results.reserve(count);
  for (auto& s : slots) results.push_back(std::move(*s));
  return results;
}

}  // namespace entlab
