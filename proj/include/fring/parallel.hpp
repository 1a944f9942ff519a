#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace fring {

/// Evaluates f(0..count-1) on up to `threads` workers. Results are stored by
/// index, so the output never depends on scheduling. The first exception (by
/// index) is rethrown after all workers finish.
template <typename F>
auto parallel_map(std::size_t count, std::size_t threads, F&& f)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(threads, count));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Smallest index i with f(i) engaged, together with its value. Workers skip
/// indices beyond the best hit so far; the answer is the same for any thread
/// count.
template <typename F>
auto parallel_find_first(std::size_t count, std::size_t threads, F&& f)
    -> std::optional<std::pair<std::size_t,
                               typename std::invoke_result_t<F&, std::size_t>::value_type>> {
  using V = typename std::invoke_result_t<F&, std::size_t>::value_type;
  std::atomic<std::size_t> best{count};
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::optional<std::pair<std::size_t, V>> hit;
  std::exception_ptr error;
  std::size_t error_index = count;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      if (i > best.load()) continue;
      try {
        auto r = f(i);
        if (!r) continue;
        std::lock_guard lock(mu);
        if (!hit || i < hit->first) {
          hit.emplace(i, std::move(*r));
          best = i;
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(threads, count));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (error && (!hit || error_index < hit->first)) std::rethrow_exception(error);
  return hit;
}

}  // namespace fring
