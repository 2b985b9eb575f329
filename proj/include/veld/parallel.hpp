#pragma once

#include <cstddef>
#include <functional>

namespace veld {

// Worker cap: min(VELD_THREADS, hardware). Returns at least 1.
std::size_t thread_budget();

// Runs fn(i) for i in [0, n) on up to thread_budget() threads with static
// chunking. Results must be written to disjoint slots; the schedule never
// affects output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace veld
