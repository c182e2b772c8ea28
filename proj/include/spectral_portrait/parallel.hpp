#pragma once

#include <cstddef>
#include <functional>

namespace spectral_portrait {

// Worker count: hardware concurrency capped by SPECTRAL_PORTRAIT_THREADS.
unsigned worker_count();

// Calls fn(i) for i in [0, n) on up to worker_count() threads. The first
// exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace spectral_portrait
