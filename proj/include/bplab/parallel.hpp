#pragma once

#include <functional>

namespace bplab {

/* Worker cap: BPLAB_THREADS if set (clamped to >= 1), else hardware
   concurrency. Read once per process. */
int thread_budget();

/* Runs body(stream) for stream = 0..streams-1 on at most thread_budget()
   threads. Streams are a fixed logical partition of the work: callers write
   results into per-stream slots and reduce them in stream order, so the
   result is identical for every thread count (including 1). */
void parallel_streams(int streams, const std::function<void(int)>& body);

}  // namespace bplab
