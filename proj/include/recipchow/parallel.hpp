#pragma once

#include <cstddef>
#include <functional>

namespace recipchow {

/// Worker count: hardware concurrency capped by the RECIPCHOW_THREADS
/// environment variable when set.
std::size_t worker_count();

/// Runs fn(0..count-1) across the workers. Rethrows the first exception.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace recipchow
