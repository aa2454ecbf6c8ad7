#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace bruhat::detail {

/// Runs body(index) for index in [0, count) on up to `threads` threads.
/// Indices are dealt round-robin so triangular workloads stay balanced.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1U, threads);
  if (threads == 1 || count < 2) {
    for (std::size_t p = 0; p < count; ++p) body(p);
    return;
  }
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(threads, count));
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t p = w; p < count; p += workers) body(p);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace bruhat::detail
