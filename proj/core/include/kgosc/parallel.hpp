#pragma once

#include <functional>

namespace kgosc {

// Run fn(0) ... fn(count-1) across at most `threads` workers. Results must be
// written by index into caller-owned storage; the partition is static, so the
// output is identical to the serial order regardless of the thread count.
void run_parallel(int count, int threads, const std::function<void(int)>& fn);

// Thread cap from the KGOSC_THREADS environment variable, falling back to the
// hardware concurrency (at least 1).
int thread_limit_from_env();

}  // namespace kgosc
