#pragma once

#include <cstddef>
#include <functional>

namespace lozi {

/// Worker count: hardware concurrency, capped by the LOZI_THREADS
/// environment variable when it holds a positive integer.
int default_thread_count();

/// Resolves a requested thread count (0 = default) to a positive number.
int resolve_threads(int requested);

/// Calls body(i) for every i in [0, count) on up to `threads` workers.
/// Indices are handed out dynamically; body must only write state owned by i.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace lozi
