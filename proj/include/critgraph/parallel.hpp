#pragma once

#include <cstddef>
#include <functional>

namespace critgraph {

/// Runs fn(i) for every i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace critgraph
