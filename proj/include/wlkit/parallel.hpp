#pragma once

#include <cstddef>
#include <functional>

namespace wlkit {

/// Worker count used by parallel_for. Defaults to the hardware
/// concurrency; results never depend on it.
void set_thread_count(unsigned threads);
unsigned thread_count();

/// Runs fn(begin, end) over a chunked index range on worker threads and
/// joins. Chunks are disjoint, so writes to per-index slots are safe.
/// Ranges shorter than `grain` run inline.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& fn,
                  std::size_t grain = 2048);

}  // namespace wlkit
