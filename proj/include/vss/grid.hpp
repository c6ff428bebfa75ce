#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace vss {

enum class Boundary { periodic, dirichlet };

std::string to_string(Boundary b);

struct GridLimits {
    int min_points_per_axis = 8;
    std::size_t max_total_points = std::size_t{1} << 22;
};

/// Tensor grid on the box [-L_0,L_0] x ... x [-L_{d-1},L_{d-1}], d <= 2,
/// with n_k points and spacing h_k = 2 L_k / n_k per axis.
///
/// Periodic axes place nodes at -L + i h (FFT layout, n a power of two);
/// Dirichlet axes are cell-centered at -L + (i + 1/2) h with homogeneous
/// walls at +-L.
class Grid {
public:
    Grid(int dim, std::array<int, 2> points, std::array<double, 2> half_extent,
         Boundary boundary, GridLimits limits = {});

    int dim() const { return dim_; }
    int points(int axis) const { return n_[axis]; }
    double half_extent(int axis) const { return half_extent_[axis]; }
    double spacing(int axis) const { return h_[axis]; }
    Boundary boundary() const { return boundary_; }

    std::size_t total_points() const { return total_; }
    /// Quadrature weight of one point (product of spacings).
    double cell_volume() const { return volume_; }

    double coord(int axis, int index) const;

    /// Flattened index, axis 0 slowest. For dim 1 pass i1 = 0.
    std::size_t index(int i0, int i1 = 0) const {
        return static_cast<std::size_t>(i0) * row_stride_ + static_cast<std::size_t>(i1);
    }
    std::array<int, 2> unflatten(std::size_t index) const {
        return {static_cast<int>(index / row_stride_), static_cast<int>(index % row_stride_)};
    }
    std::string point_label(std::size_t index) const;

    bool operator==(const Grid& other) const;
    bool operator!=(const Grid& other) const { return !(*this == other); }

private:
    int dim_;
    std::array<int, 2> n_;
    std::array<double, 2> half_extent_;
    std::array<double, 2> h_;
    Boundary boundary_;
    std::size_t total_;
    std::size_t row_stride_;
    double volume_;
};

} // namespace vss
