#pragma once

#include <cstddef>
#include <functional>

namespace ybmap {

/// Worker count: hardware concurrency, capped by the YBMAP_THREADS
/// environment variable when it holds a positive integer.
std::size_t thread_limit();

/// Calls body(i) for every i in [0, count). Iterations must be independent;
/// results belong in per-index slots so the outcome does not depend on
/// scheduling. The first exception thrown by any iteration is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace ybmap
