#pragma once

#include <cstddef>
#include <functional>

namespace caliber {

// Worker count: CALIBER_THREADS if set to a positive integer, else the hardware concurrency.
int worker_count();

// Runs body(i) for i in [0, count) on up to worker_count() threads. Results must be
// written to per-index slots; the first exception thrown is rethrown after joining.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace caliber
