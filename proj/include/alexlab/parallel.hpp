#pragma once

#include <cstddef>
#include <functional>

namespace alexlab {

/// Worker count used by parallel_for (default 1).
void set_threads(int n);
int threads();

/// Runs body(i) for i in [0, n), split over threads() workers in contiguous
/// blocks. Callers write results by index, so output never depends on timing.
/// The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace alexlab
