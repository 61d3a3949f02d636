#pragma once

#include <functional>

namespace atlas::expt {

// Worker count: DISCORD_ATLAS_THREADS if set to a positive integer, hardware
// concurrency when unset, 0, or unparseable.
int thread_budget();

// Run fn(0) .. fn(n-1) across the thread budget. Callers write results into
// index-addressed slots, so scheduling cannot change the assembled output.
// The first exception thrown by any item is rethrown after all workers join.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace atlas::expt
