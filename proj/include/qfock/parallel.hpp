#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qfock {

/// Worker count: QFOCK_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
int thread_cap();

/// Runs body(k) for k in [0, n) on up to thread_cap() threads. Each index
/// runs exactly once; the first exception thrown is rethrown after all
/// workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// results[k] = fn(k); ordering is deterministic regardless of scheduling.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, F&& fn) {
  std::vector<R> out(n);
  parallel_for(n, [&](std::size_t k) { out[k] = fn(k); });
  return out;
}

}  // namespace qfock
