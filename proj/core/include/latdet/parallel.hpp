#pragma once

#include <cstddef>
#include <functional>

namespace latdet {

/// Worker count matching the machine's hardware parallelism (at least 1).
unsigned hardware_workers() noexcept;

/// Run body(0..count-1). workers <= 1 runs inline on the calling thread;
/// otherwise indices are striped across that many threads. The first
/// exception thrown by any body is rethrown after all threads join.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace latdet
