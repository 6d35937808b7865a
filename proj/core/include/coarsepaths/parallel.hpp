#pragma once

#include <cstddef>
#include <functional>

namespace coarsepaths {

/// Hardware concurrency, capped by the COARSEPATHS_THREADS environment
/// variable when it holds a positive integer. Never returns 0.
unsigned default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 means
/// default_thread_count()). Work is claimed dynamically; callers write
/// results into per-index slots so merge order stays deterministic. The
/// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace coarsepaths
