#pragma once

#include "vss/grid.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace vss {

using cplx = std::complex<double>;

/// m complex components sampled at every grid point, point-major storage:
/// value(p, j) lives at data()[p * m + j].
class VectorField {
public:
    VectorField(Grid grid, int m);

    static VectorField from_function(
        const Grid& grid, int m,
        const std::function<void(const std::array<double, 2>&, cplx*)>& f);

    const Grid& grid() const { return grid_; }
    int components() const { return m_; }

    cplx& at(std::size_t point, int j) { return data_[point * m_ + j]; }
    const cplx& at(std::size_t point, int j) const { return data_[point * m_ + j]; }

    std::vector<cplx>& data() { return data_; }
    const std::vector<cplx>& data() const { return data_; }

    /// Index of the first non-finite entry, or npos when all entries are finite.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_non_finite() const;

private:
    Grid grid_;
    int m_;
    std::vector<cplx> data_;
};

/// One real value per grid point.
class ScalarField {
public:
    explicit ScalarField(Grid grid, double fill = 0.0);

    static ScalarField from_function(const Grid& grid,
                                     const std::function<double(const std::array<double, 2>&)>& f);

    const Grid& grid() const { return grid_; }
    double& at(std::size_t point) { return data_[point]; }
    double at(std::size_t point) const { return data_[point]; }
    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

private:
    Grid grid_;
    std::vector<double> data_;
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(cplx c, const VectorField& u);

} // namespace vss
