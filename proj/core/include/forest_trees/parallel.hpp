#pragma once

#include <cstddef>
#include <functional>

namespace forest_trees {

/// Worker count: hardware concurrency, capped by the FOREST_TREES_THREADS
/// environment variable when it holds a positive integer.
std::size_t worker_count();

/// Runs body(i) for every i in [0, count). Work is split over worker_count()
/// threads; callers write results into per-index slots so the outcome does not
/// depend on scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace forest_trees
