#include "vss/grid.hpp"

#include "vss/error.hpp"

#include <cmath>
#include <sstream>

namespace vss {

std::string to_string(Boundary b) {
    return b == Boundary::periodic ? "periodic" : "dirichlet";
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

Grid::Grid(int dim, std::array<int, 2> points, std::array<double, 2> half_extent,
           Boundary boundary, GridLimits limits)
    : dim_(dim), n_(points), half_extent_(half_extent), boundary_(boundary) {
    if (dim < 1 || dim > 2)
        throw std::invalid_argument("Grid: dim must be 1 or 2");
    total_ = 1;
    for (int a = 0; a < dim_; ++a) {
        if (n_[a] < limits.min_points_per_axis)
            throw std::invalid_argument("Grid: axis " + std::to_string(a) + " has " +
                                        std::to_string(n_[a]) + " points, minimum is " +
                                        std::to_string(limits.min_points_per_axis));
        if (boundary_ == Boundary::periodic && !is_power_of_two(n_[a]))
            throw std::invalid_argument("Grid: periodic axis " + std::to_string(a) +
                                        " needs a power-of-two point count, got " +
                                        std::to_string(n_[a]));
        if (!(half_extent_[a] > 0.0) || !std::isfinite(half_extent_[a]))
            throw std::invalid_argument("Grid: half extent of axis " + std::to_string(a) +
                                        " must be positive and finite");
        h_[a] = 2.0 * half_extent_[a] / n_[a];
        total_ *= static_cast<std::size_t>(n_[a]);
    }
    for (int a = dim_; a < 2; ++a) {
        n_[a] = 1;
        half_extent_[a] = 0.0;
        h_[a] = 1.0;
    }
    if (total_ > limits.max_total_points)
        throw std::invalid_argument("Grid: " + std::to_string(total_) +
                                    " points exceed the memory budget of " +
                                    std::to_string(limits.max_total_points));
    row_stride_ = static_cast<std::size_t>(n_[1]);
    volume_ = 1.0;
    for (int a = 0; a < dim_; ++a) volume_ *= h_[a];
}

double Grid::coord(int axis, int index) const {
    const double offset = boundary_ == Boundary::dirichlet ? 0.5 : 0.0;
    return -half_extent_[axis] + (index + offset) * h_[axis];
}

std::string Grid::point_label(std::size_t index) const {
    const auto ij = unflatten(index);
    std::ostringstream os;
    os << "(i0=" << ij[0] << ", x0=" << coord(0, ij[0]);
    if (dim_ == 2) os << ", i1=" << ij[1] << ", x1=" << coord(1, ij[1]);
    os << ")";
    return os.str();
}

bool Grid::operator==(const Grid& other) const {
    if (dim_ != other.dim_ || boundary_ != other.boundary_) return false;
    for (int a = 0; a < dim_; ++a)
        if (n_[a] != other.n_[a] || half_extent_[a] != other.half_extent_[a]) return false;
    return true;
}

} // namespace vss
