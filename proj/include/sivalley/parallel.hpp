#ifndef SIVALLEY_PARALLEL_HPP
#define SIVALLEY_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace sivalley {

/// Calls fn(i) for i in [0, n) on up to `threads` workers. Each index is
/// handled exactly once; callers write results by index so the merge order
/// never depends on scheduling. The exception of the lowest failing index is rethrown.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace sivalley

#endif  // SIVALLEY_PARALLEL_HPP
