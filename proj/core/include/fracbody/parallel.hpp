#pragma once

#include <cstddef>
#include <functional>

namespace fracbody {

/// Worker count resolution order: explicit argument > FRACBODY_THREADS env
/// var > hardware concurrency.
int resolve_thread_count(int requested = 0);

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Determinism
/// contract: fn writes only to index-i slots, so the result is independent
/// of the schedule; reductions are done by the caller after the loop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  int threads = 0);

}  // namespace fracbody
