#ifndef VCIND_PARALLEL_HPP
#define VCIND_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace vcind {

/// Worker count: hardware concurrency, capped by the VCIND_THREADS
/// environment variable when set.  Always >= 1.
std::size_t thread_count();

/// Run fn(i) for i in [0, count).  Iterations must write disjoint state;
/// results are then independent of scheduling.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn);

} // namespace vcind

#endif
