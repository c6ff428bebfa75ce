#pragma once

#include <span>

namespace vss {

/// Pairwise summation with a fixed association order, so results are
/// bit-reproducible independent of chunking or thread count.
double pairwise_sum(std::span<const double> v);

} // namespace vss
