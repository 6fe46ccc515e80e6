#pragma once

#include <cstddef>
#include <functional>

namespace netfex {

// 0 or negative requests -> hardware concurrency (at least 1).
int resolve_threads(int requested);

// Runs `chunk_fn(begin, end, worker)` over static contiguous chunks of [0, n).
// Chunking depends only on n and the thread count, so per-worker partial
// results can be merged in worker order for reproducible floating-point sums.
void parallel_for_chunks(std::size_t n, int threads,
                         const std::function<void(std::size_t, std::size_t, int)>& chunk_fn);

}  // namespace netfex
