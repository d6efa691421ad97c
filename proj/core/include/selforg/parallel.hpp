#pragma once

#include <functional>

namespace selforg {

// Worker count for sweep parallelism: hardware concurrency, capped by the
// CAVITY_SELFORG_THREADS environment variable when set (minimum 1).
int worker_count();

// Runs fn(0..n-1) on up to worker_count() threads. Results must be written to
// preallocated slots indexed by i so output order never depends on timing.
// The first exception thrown by any task is rethrown on the caller thread.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace selforg
