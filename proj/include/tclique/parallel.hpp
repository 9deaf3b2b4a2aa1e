#pragma once

#include <cstddef>
#include <functional>

namespace tclique {

// Number of worker threads to use when the caller passes 0.
std::size_t default_thread_count();

// Calls body(i) for every i in [0, count) on up to `threads` workers
// (0 = default). Indices are handed out dynamically; the first exception
// thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace tclique
