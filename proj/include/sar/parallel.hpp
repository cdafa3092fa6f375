#pragma once

#include <cstddef>
#include <functional>

namespace sar {

// Worker count for data-parallel loops. SARFOCUS_THREADS caps it; 0 or unset
// means hardware concurrency.
unsigned worker_count();

// Runs fn over [0, n) split into contiguous chunks, one per worker. fn gets
// (begin, end). Partitioning is deterministic; results must not depend on
// execution order.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace sar
