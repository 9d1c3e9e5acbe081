#pragma once

#include <cstddef>
#include <functional>

namespace xychain {

/// Worker count: XYCHAIN_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index runs exactly
/// once; results must be written to per-index slots so output order never depends on
/// scheduling. The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace xychain
