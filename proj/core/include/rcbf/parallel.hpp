#pragma once

#include <cstddef>
#include <functional>

namespace rcbf {

/// Number of worker threads used by parallel_for. Resolution order:
/// RCBF_WORKERS environment variable, then hardware concurrency.
std::size_t worker_count();

/// Runs fn(begin..end) split into contiguous chunks across the worker pool.
/// Results must be written to disjoint slots so the outcome is independent of
/// scheduling. Nested calls from inside a worker run inline on the caller.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace rcbf
