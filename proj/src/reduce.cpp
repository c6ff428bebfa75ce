#include "vss/reduce.hpp"

namespace vss {

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 32) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

} // namespace vss
