#pragma once

#include <cstddef>
#include <functional>

namespace wandering {

/// Worker count: WANDERING_LAB_THREADS if set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
std::size_t worker_count();

/// Calls body(begin, end) on contiguous, disjoint chunks covering [0, count).
/// Chunks run concurrently; the body must only write to per-index state.
/// Blocks until every chunk has finished and rethrows the first exception.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace wandering
