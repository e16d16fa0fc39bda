#pragma once

#include <cstddef>
#include <functional>

namespace frameseq {

// Number of worker threads: hardware concurrency capped by the
// FRAMESEQ_THREADS environment variable (when set and positive).
unsigned worker_count();

// Calls body(i) for every i in [0, n). Indices are split into contiguous
// blocks, one per worker; body must only write to slots it owns.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace frameseq
