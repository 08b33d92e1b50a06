#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace shocklab {

/// Worker count: SHOCKLAB_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
int thread_count();

/// Splits [begin, end) into contiguous chunks, one per worker, and calls
/// body(lo, hi) on each. Chunks never overlap, so bodies that only write
/// inside their own range need no synchronization.
void parallel_for(std::ptrdiff_t begin, std::ptrdiff_t end,
                  const std::function<void(std::ptrdiff_t, std::ptrdiff_t)>& body);

/// Pairwise (tree) summation. The reduction order depends only on the input
/// length, never on the thread count.
double pairwise_sum(std::span<const double> values);

}  // namespace shocklab
