#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace ginlab {

/// Worker count: hardware concurrency, capped by the GINLAB_THREADS environment variable.
std::size_t worker_count();

/// Runs fn(i) for i in [0, n) on up to worker_count() threads. The first exception thrown by
/// any task is rethrown on the calling thread after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace ginlab
