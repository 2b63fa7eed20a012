#pragma once

#include <cstddef>
#include <functional>

namespace skipcorr {

// Worker count from SKIPCORR_THREADS, default 1. Results must not depend
// on this; every parallel_for body writes to its own index slot.
std::size_t worker_count();

// Runs fn(i) for i in [begin, end) across worker_count() threads in fixed
// contiguous blocks. With one worker this is a plain loop. Exceptions are
// captured and the first one (lowest index block) is rethrown.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

} // namespace skipcorr
