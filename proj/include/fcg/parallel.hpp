#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace fcg {

/// Evaluates fn(i) for i in [0, count) on up to `workers` threads and returns
/// the results in index order, so the output never depends on scheduling.
template <class F>
auto parallel_map(std::size_t count, int workers, F&& fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> out(count);
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += threads) out[i] = fn(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace fcg
