#pragma once

#include <cstddef>
#include <functional>

namespace mqpsh {

// Worker cap from the MQPSH_THREADS environment variable (0 or unset = auto).
int worker_count();

/* Runs fn(begin, end) over a partition of [0, n).  Chunks write to disjoint
 * output slots only; results are independent of the partitioning, so callers
 * stay deterministic. */
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace mqpsh
