#pragma once

#include <functional>

namespace qkgr {

// Runs fn(0..total-1) on up to `threads` workers (0 = all hardware cores).
// Work items must be independent; the first thrown exception is rethrown on
// the calling thread after all workers join.
void parallel_for(int total, int threads, const std::function<void(int)>& fn);

int resolve_threads(int threads);

} // namespace qkgr
