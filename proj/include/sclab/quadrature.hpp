#ifndef SCLAB_QUADRATURE_HPP
#define SCLAB_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "sclab/grid.hpp"

namespace sclab {

/// Composite Simpson over [a,b] with n panels (each panel uses the midpoint).
template <class F>
double simpson(F&& f, double a, double b, std::size_t panels = 64) {
    if (panels == 0) panels = 1;
    const double h = (b - a) / static_cast<double>(panels);
    double acc = 0.0;
    for (std::size_t k = 0; k < panels; ++k) {
        const double x0 = a + static_cast<double>(k) * h;
        const double x1 = x0 + h;
        acc += (h / 6.0) * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
    }
    return acc;
}

/// Cumulative Simpson antiderivative of f on the grid: G[0] = 0,
/// G[i+1] = G[i] + Simpson over [x_i, x_{i+1}] (midpoint-evaluated).
template <class F>
std::vector<double> cumulative_simpson(F&& f, const Grid1D& g) {
    std::vector<double> G(g.n, 0.0);
    const double dx = g.dx();
    for (std::size_t i = 0; i + 1 < g.n; ++i) {
        const double x0 = g.x(i);
        const double x1 = x0 + dx;
        G[i + 1] = G[i] + (dx / 6.0) * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
    }
    return G;
}

/// Trapezoid rule over the masked nodes of a contiguous index range.
/// Cells where either endpoint is unmasked contribute nothing.
inline double trapezoid_masked(const Grid1D& g, const std::vector<double>& v,
                               const std::vector<char>& mask) {
    double acc = 0.0;
    const double dx = g.dx();
    for (std::size_t i = 0; i + 1 < g.n; ++i)
        if (mask[i] && mask[i + 1]) acc += 0.5 * dx * (v[i] + v[i + 1]);
    return acc;
}

/// Composite Simpson over grid samples between node indices [i0, i1]
/// (falls back to trapezoid on a trailing odd cell).
inline double simpson_samples(const Grid1D& g, const std::vector<double>& v,
                              std::size_t i0, std::size_t i1) {
    if (i1 <= i0) return 0.0;
    double acc = 0.0;
    const double dx = g.dx();
    std::size_t i = i0;
    for (; i + 2 <= i1; i += 2)
        acc += (dx / 3.0) * (v[i] + 4.0 * v[i + 1] + v[i + 2]);
    if (i + 1 <= i1) acc += 0.5 * dx * (v[i] + v[i + 1]);
    return acc;
}

}  // namespace sclab

#endif  // SCLAB_QUADRATURE_HPP
