#include "vss/field.hpp"

#include "vss/error.hpp"

#include <cmath>

namespace vss {

namespace {
constexpr int kMaxComponents = 8;
}

VectorField::VectorField(Grid grid, int m) : grid_(std::move(grid)), m_(m) {
    if (m_ < 1 || m_ > kMaxComponents)
        throw std::invalid_argument("VectorField: component count must be in [1, " +
                                    std::to_string(kMaxComponents) + "], got " +
                                    std::to_string(m_));
    data_.assign(grid_.total_points() * static_cast<std::size_t>(m_), cplx{0.0, 0.0});
}

VectorField VectorField::from_function(
    const Grid& grid, int m,
    const std::function<void(const std::array<double, 2>&, cplx*)>& f) {
    VectorField u(grid, m);
    const int n1 = grid.dim() == 2 ? grid.points(1) : 1;
    for (int i0 = 0; i0 < grid.points(0); ++i0) {
        for (int i1 = 0; i1 < n1; ++i1) {
            const std::array<double, 2> x{grid.coord(0, i0),
                                          grid.dim() == 2 ? grid.coord(1, i1) : 0.0};
            f(x, &u.at(grid.index(i0, i1), 0));
        }
    }
    return u;
}

std::size_t VectorField::first_non_finite() const {
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!std::isfinite(data_[k].real()) || !std::isfinite(data_[k].imag())) return k;
    return npos;
}

ScalarField::ScalarField(Grid grid, double fill) : grid_(std::move(grid)) {
    data_.assign(grid_.total_points(), fill);
}

ScalarField ScalarField::from_function(
    const Grid& grid, const std::function<double(const std::array<double, 2>&)>& f) {
    ScalarField s(grid);
    const int n1 = grid.dim() == 2 ? grid.points(1) : 1;
    for (int i0 = 0; i0 < grid.points(0); ++i0)
        for (int i1 = 0; i1 < n1; ++i1) {
            const std::array<double, 2> x{grid.coord(0, i0),
                                          grid.dim() == 2 ? grid.coord(1, i1) : 0.0};
            s.at(grid.index(i0, i1)) = f(x);
        }
    return s;
}

namespace {

void require_same_shape(const VectorField& a, const VectorField& b) {
    if (a.grid() != b.grid() || a.components() != b.components())
        throw std::invalid_argument("VectorField: operands live on different grids");
}

} // namespace

VectorField operator+(const VectorField& a, const VectorField& b) {
    require_same_shape(a, b);
    VectorField r = a;
    for (std::size_t k = 0; k < r.data().size(); ++k) r.data()[k] += b.data()[k];
    return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    require_same_shape(a, b);
    VectorField r = a;
    for (std::size_t k = 0; k < r.data().size(); ++k) r.data()[k] -= b.data()[k];
    return r;
}

VectorField operator*(cplx c, const VectorField& u) {
    VectorField r = u;
    for (auto& z : r.data()) z *= c;
    return r;
}

} // namespace vss
