#pragma once

#include <cstddef>
#include <functional>

namespace chevlab {

// Worker cap: CHEVLAB_THREADS if set and positive, else the hardware count.
std::size_t worker_count();

// Runs body(k) for k in [0, n) on up to worker_count() threads. Each index
// is visited exactly once; callers write results into per-index slots so
// the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace chevlab
