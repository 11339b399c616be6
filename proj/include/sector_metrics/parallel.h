#pragma once

#include <cstddef>
#include <functional>

namespace sector_metrics {

/// Worker count: SECTOR_METRICS_THREADS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, n) on thread_count() workers. Indices are
/// handed out in contiguous chunks; callers write results by index so the
/// outcome does not depend on scheduling. The exception from the lowest
/// failing index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sector_metrics
