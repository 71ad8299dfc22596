#pragma once

#include <cstddef>
#include <functional>

namespace dtile {

/// Worker count used by parallel loops; 0 or negative restores the default
/// (hardware concurrency).
void set_thread_count(int threads);
int thread_count();

/// Runs body(i) for i in [0, n). Iterations must write only to their own
/// slots; the first exception thrown by any iteration is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace dtile
