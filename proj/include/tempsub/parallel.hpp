#pragma once

#include <cstdint>
#include <functional>

namespace tempsub {

/// Worker count: explicit request > 0 wins, then the TEMPSUB_THREADS
/// environment variable, then hardware concurrency.
[[nodiscard]] int resolve_threads(int request = 0);

/// Runs fn over [0, n) split into `threads` contiguous chunks. Work items
/// must be independent; results keyed by item index are identical for every
/// thread count.
void parallel_for(std::int64_t n, int threads,
                  const std::function<void(std::int64_t begin, std::int64_t end)>& fn);

}  // namespace tempsub
