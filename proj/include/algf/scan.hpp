#pragma once

// First-failure and minimum scans over an index range.  Every exhaustive
// verifier and the canonical-form search reduce to one of these.  The serial
// versions are the reference; the OpenMP versions must return the same index
// (lowest failing / lowest minimising), which the tests cross-check.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace algf {

enum class ExecutionPolicy { serial, parallel };

ExecutionPolicy default_policy();
void set_default_policy(ExecutionPolicy policy);

namespace scan {

template <class Failing>
std::optional<std::size_t> first_failure_serial(std::size_t count,
                                                Failing&& failing) {
  for (std::size_t i = 0; i < count; ++i) {
    if (failing(i)) return i;
  }
  return std::nullopt;
}

template <class Failing>
std::optional<std::size_t> first_failure_parallel(std::size_t count,
                                                  Failing&& failing) {
  std::atomic<std::size_t> best{count};
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    if (failing(idx)) {
      std::size_t current = best.load(std::memory_order_relaxed);
      while (idx < current &&
             !best.compare_exchange_weak(current, idx,
                                         std::memory_order_relaxed)) {
      }
    }
  }
  const std::size_t found = best.load();
  if (found == count) return std::nullopt;
  return found;
}

/// Lowest index i in [0, count) with failing(i) true.
template <class Failing>
std::optional<std::size_t> first_failure(std::size_t count, Failing&& failing,
                                         ExecutionPolicy policy) {
  if (policy == ExecutionPolicy::parallel) {
    return first_failure_parallel(count, failing);
  }
  return first_failure_serial(count, failing);
}

template <class Failing>
std::optional<std::size_t> first_failure(std::size_t count,
                                         Failing&& failing) {
  return first_failure(count, failing, default_policy());
}

template <class Value, class Eval>
std::optional<std::pair<std::size_t, Value>> minimum_serial(std::size_t count,
                                                            Eval&& eval) {
  std::optional<std::pair<std::size_t, Value>> best;
  for (std::size_t i = 0; i < count; ++i) {
    std::optional<Value> v = eval(i);
    if (v && (!best || *v < best->second)) best.emplace(i, std::move(*v));
  }
  return best;
}

/// Smallest value of eval(i) (nullopt entries skipped), lowest i on ties.
/// Per-thread minima are merged in thread order, which is also index order
/// under the static schedule.
template <class Value, class Eval>
std::optional<std::pair<std::size_t, Value>> minimum_parallel(std::size_t count,
                                                              Eval&& eval) {
  std::optional<std::pair<std::size_t, Value>> best;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    std::optional<std::pair<std::size_t, Value>> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      std::optional<Value> v = eval(static_cast<std::size_t>(i));
      if (v && (!local || *v < local->second)) {
        local.emplace(static_cast<std::size_t>(i), std::move(*v));
      }
    }
#pragma omp critical(algf_scan_minimum)
    {
      if (local && (!best || local->second < best->second ||
                    (!(best->second < local->second) &&
                     local->first < best->first))) {
        best = std::move(local);
      }
    }
  }
  return best;
}

template <class Value, class Eval>
std::optional<std::pair<std::size_t, Value>> minimum(std::size_t count,
                                                     Eval&& eval,
                                                     ExecutionPolicy policy) {
  if (policy == ExecutionPolicy::parallel) {
    return minimum_parallel<Value>(count, eval);
  }
  return minimum_serial<Value>(count, eval);
}

/// Applies fn(i) for every i; fn must only write to slot i of its output.
template <class Fn>
void for_each_index(std::size_t count, Fn&& fn, ExecutionPolicy policy) {
  if (policy == ExecutionPolicy::parallel) {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
    return;
  }
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace scan
}  // namespace algf
