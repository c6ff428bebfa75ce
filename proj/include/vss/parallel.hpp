#pragma once

#include <cstddef>
#include <functional>

namespace vss {

/// Worker count for point-wise maps. Reductions stay single-threaded with a
/// fixed association order, so results do not depend on this setting.
void set_num_threads(int n);
int num_threads();

/// Runs body(begin, end) over contiguous chunks of [0, n). The body must
/// write only to locations derived from its own index range.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

} // namespace vss
