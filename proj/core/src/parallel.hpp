#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace netprice::detail {

// Runs body(i) for i in [0, count) on up to hardware_concurrency threads.
// Callers write results into per-index slots, so the outcome is independent
// of scheduling.
template <class Body>
void parallel_for(std::int64_t count, Body&& body, std::int64_t min_chunk = 1) {
  const auto hw = static_cast<std::int64_t>(std::max(1U, std::thread::hardware_concurrency()));
  const std::int64_t workers = std::min(hw, std::max<std::int64_t>(1, count / std::max<std::int64_t>(1, min_chunk)));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (std::int64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::int64_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace netprice::detail
