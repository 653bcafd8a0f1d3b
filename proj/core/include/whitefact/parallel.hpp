#pragma once

#include <cstddef>
#include <functional>

namespace whitefact {

// Worker count from WHITEFACT_THREADS (0 or unset: hardware concurrency).
std::size_t thread_count();

// Runs body(k) for k in [0, n) on up to thread_count() threads. The first
// exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace whitefact
