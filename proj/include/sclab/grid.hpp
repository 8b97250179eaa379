#ifndef SCLAB_GRID_HPP
#define SCLAB_GRID_HPP

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sclab/errors.hpp"

namespace sclab {

/// Uniform 1D grid of n nodes on [a,b], node i at a + i*dx.
struct Grid1D {
    double a = 0.0;
    double b = 1.0;
    std::size_t n = 2;

    Grid1D() = default;
    Grid1D(double a_, double b_, std::size_t n_) : a(a_), b(b_), n(n_) {
        if (!(b > a) || n < 2) throw Error("Grid1D: need b > a and n >= 2");
    }

    double dx() const { return (b - a) / static_cast<double>(n - 1); }
    double x(std::size_t i) const { return a + static_cast<double>(i) * dx(); }
    bool contains(double xq) const { return xq >= a && xq <= b; }

    // Index of the cell [x(i), x(i+1)] containing xq, clamped to valid range.
    std::size_t cell_of(double xq) const {
        double t = (xq - a) / dx();
        auto i = static_cast<long>(std::floor(t));
        if (i < 0) i = 0;
        if (i > static_cast<long>(n) - 2) i = static_cast<long>(n) - 2;
        return static_cast<std::size_t>(i);
    }
};

/// Real field sampled on a Grid1D, with an optional definition mask
/// (fields like d_E live only on the forbidden region).
struct ScalarField {
    Grid1D grid;
    std::vector<double> values;
    std::vector<char> mask;  // 1 = defined, 0 = undefined

    ScalarField() = default;
    explicit ScalarField(const Grid1D& g, double fill = 0.0)
        : grid(g), values(g.n, fill), mask(g.n, 1) {}

    std::size_t size() const { return values.size(); }
    bool defined(std::size_t i) const { return mask[i] != 0; }

    // Linear interpolation; both endpoints of the enclosing cell must be
    // in the mask.
    double interp(double xq) const {
        if (!grid.contains(xq)) throw CurveOutsideDomain("interp: point outside grid");
        std::size_t i = grid.cell_of(xq);
        if (!defined(i) || !defined(i + 1))
            throw Error("interp: point falls in an undefined cell");
        double t = (xq - grid.x(i)) / grid.dx();
        return (1.0 - t) * values[i] + t * values[i + 1];
    }
};

/// Central-difference derivative of a sampled function, one-sided at the ends.
inline std::vector<double> derivative(const Grid1D& g, const std::vector<double>& v) {
    assert(v.size() == g.n);
    std::vector<double> d(g.n, 0.0);
    const double dx = g.dx();
    for (std::size_t i = 1; i + 1 < g.n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * dx);
    if (g.n >= 2) {
        d[0] = (v[1] - v[0]) / dx;
        d[g.n - 1] = (v[g.n - 1] - v[g.n - 2]) / dx;
    }
    if (g.n >= 3) {
        // second-order one-sided at the walls
        d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dx);
        d[g.n - 1] = (3.0 * v[g.n - 1] - 4.0 * v[g.n - 2] + v[g.n - 3]) / (2.0 * dx);
    }
    return d;
}

/// Rectangular (s,theta) grid for the surface of revolution, s = meridian
/// arclength in the ambient metric, theta periodic on [0, 2*pi).
struct Grid2D {
    Grid1D s;            // meridian arclength nodes
    std::size_t ntheta = 8;

    double dtheta() const { return 2.0 * M_PI / static_cast<double>(ntheta); }
    double theta(std::size_t j) const { return static_cast<double>(j) * dtheta(); }
    std::size_t size() const { return s.n * ntheta; }
    std::size_t idx(std::size_t i, std::size_t j) const { return i * ntheta + j; }
};

}  // namespace sclab

#endif  // SCLAB_GRID_HPP
