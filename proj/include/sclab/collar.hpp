#ifndef SCLAB_COLLAR_HPP
#define SCLAB_COLLAR_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sclab/errors.hpp"
#include "sclab/grid.hpp"
#include "sclab/problem.hpp"
#include "sclab/quadrature.hpp"

namespace sclab {

/// A 1D meridian view shared by interval problems (w = 1, s = x) and
/// surface problems (w = sqrt(1+f'^2), s = ambient meridian arclength).
/// All collar and Agmon-distance computations run on this view.
struct MeridianModel {
    Grid1D grid;                 // native coordinate t (x in 1D, z on the surface)
    double E = 0.0;
    std::vector<double> V;       // V at nodes
    std::vector<double> w;       // arclength weight at nodes
    std::vector<double> s;       // arclength at nodes (anchored at t = 0 when inside)
    std::function<double(double)> Vfn;
    std::function<double(double)> wfn;

    bool forbidden(std::size_t i) const { return V[i] > E; }
};

inline MeridianModel meridian_of(const Problem1D& p) {
    MeridianModel m;
    m.grid = p.grid;
    m.E = p.E;
    m.V = p.sample_V();
    m.w.assign(p.grid.n, 1.0);
    m.s.resize(p.grid.n);
    for (std::size_t i = 0; i < p.grid.n; ++i) m.s[i] = p.grid.x(i);
    m.Vfn = p.V.eval;
    m.wfn = [](double) { return 1.0; };
    return m;
}

inline MeridianModel meridian_of(const RadialSurfaceProblem& p) {
    MeridianModel m;
    m.grid = p.zgrid;
    m.E = p.E;
    m.V.resize(p.zgrid.n);
    m.w.resize(p.zgrid.n);
    for (std::size_t i = 0; i < p.zgrid.n; ++i) {
        double z = p.zgrid.x(i);
        m.V[i] = p.V(z);
        m.w[i] = p.profile.w(z);
    }
    m.s = p.arclength_table();
    m.Vfn = p.V.eval;
    m.wfn = [prof = p.profile](double z) { return prof.w(z); };
    return m;
}

/// One transversal crossing of {V = E}.
struct CausticCrossing {
    double t = 0.0;        // native coordinate of the crossing
    double s = 0.0;        // arclength coordinate
    int orientation = +1;  // +1 if the forbidden side is toward increasing t
    double grad_mag = 0.0; // |dV/ds| at the crossing (finite differences)
};

struct RegularityReport {
    bool ok = false;
    double min_grad = 0.0;
    std::vector<CausticCrossing> crossings;
};

namespace detail {

// dV/ds at the nodes: central differences in t, scaled by 1/w.
inline std::vector<double> dV_ds(const MeridianModel& m) {
    std::vector<double> d = derivative(m.grid, m.V);
    for (std::size_t i = 0; i < m.grid.n; ++i) d[i] /= m.w[i];
    return d;
}

inline double lerp_at(const Grid1D& g, const std::vector<double>& v, double tq) {
    std::size_t i = g.cell_of(tq);
    double t = (tq - g.x(i)) / g.dx();
    return (1.0 - t) * v[i] + t * v[i + 1];
}

}  // namespace detail

inline std::vector<CausticCrossing> find_caustic_crossings(const MeridianModel& m) {
    std::vector<CausticCrossing> out;
    const auto dv = detail::dV_ds(m);
    const double dx = m.grid.dx();
    for (std::size_t i = 0; i + 1 < m.grid.n; ++i) {
        double d0 = m.V[i] - m.E, d1 = m.V[i + 1] - m.E;
        CausticCrossing c;
        if (d0 == 0.0) {
            c.t = m.grid.x(i);
            // tangential touches get orientation from the right neighbour and
            // a vanishing gradient, which regularity checks then reject
            c.orientation = d1 > 0.0 ? +1 : -1;
        } else if (d0 * d1 < 0.0) {
            c.t = m.grid.x(i) + dx * d0 / (d0 - d1);
            c.orientation = d1 > d0 ? +1 : -1;
        } else {
            continue;
        }
        c.s = detail::lerp_at(m.grid, m.s, c.t);
        c.grad_mag = std::fabs(detail::lerp_at(m.grid, dv, c.t));
        out.push_back(c);
    }
    // trailing exact zero
    if (m.V[m.grid.n - 1] == m.E) {
        CausticCrossing c;
        c.t = m.grid.b;
        c.orientation = (m.V[m.grid.n - 2] - m.E) < 0.0 ? +1 : -1;
        c.s = m.s.back();
        c.grad_mag = std::fabs(detail::dV_ds(m).back());
        out.push_back(c);
    }
    return out;
}

/// True iff every caustic crossing has |dV/ds| >= tol. Throws NoCausticFound
/// when V - E never touches zero on the grid.
inline RegularityReport check_regular_energy(const MeridianModel& m, double tol) {
    RegularityReport rep;
    rep.crossings = find_caustic_crossings(m);
    if (rep.crossings.empty())
        throw NoCausticFound("check_regular_energy: V - E has no sign change on the domain");
    rep.min_grad = std::numeric_limits<double>::infinity();
    for (const auto& c : rep.crossings) rep.min_grad = std::min(rep.min_grad, c.grad_mag);
    rep.ok = rep.min_grad >= tol;
    return rep;
}

template <class P>
RegularityReport check_regular_energy(const P& problem, double tol) {
    return check_regular_energy(meridian_of(problem), tol);
}

/// Collar U_E(r0): the Fermi defining function y_n (signed arclength offset
/// to the nearest caustic component, positive on the forbidden side), the
/// factor F with V - E = y_n F, and the normal derivative of V.
struct CollarRegion {
    double r0 = 0.0;
    double E = 0.0;
    ScalarField y_n;              // masked to collar nodes
    ScalarField F;                // same mask
    std::vector<double> dVdyn;    // partial_{y_n} V per collar node (same mask)
    std::vector<CausticCrossing> components;

    bool in_collar(std::size_t i) const { return y_n.defined(i); }
    bool in_forbidden_collar(std::size_t i) const { return y_n.defined(i) && y_n.values[i] > 0.0; }

    double max_dVdyn_collar() const {
        double v = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < y_n.size(); ++i)
            if (in_collar(i)) v = std::max(v, dVdyn[i]);
        return v;
    }
    double min_dVdyn_forbidden() const {
        double v = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < y_n.size(); ++i)
            if (in_forbidden_collar(i)) v = std::min(v, dVdyn[i]);
        return v;
    }
    /// Carleman scaling constant tau = max_{U_E(r0)} |dV/dy_n|^(1/2).
    double tau_scaling() const { return std::sqrt(max_dVdyn_collar()); }
};

inline CollarRegion build_collar(const MeridianModel& m, double r0) {
    if (!(r0 > 0.0)) throw Error("build_collar: r0 must be positive");
    auto crossings = find_caustic_crossings(m);
    // drop tangential touches; transversal components only
    std::vector<CausticCrossing> comps;
    for (const auto& c : crossings)
        if (c.grad_mag > 0.0) comps.push_back(c);
    if (comps.empty()) throw NoCausticFound("build_collar: no transversal caustic crossing");

    const auto dv = detail::dV_ds(m);
    CollarRegion col;
    col.r0 = r0;
    col.E = m.E;
    col.components = comps;
    col.y_n = ScalarField(m.grid, 0.0);
    col.F = ScalarField(m.grid, 0.0);
    col.y_n.mask.assign(m.grid.n, 0);
    col.F.mask.assign(m.grid.n, 0);
    col.dVdyn.assign(m.grid.n, 0.0);

    // per-component monotonicity on the full collar band |s - s_c| < r0
    for (const auto& c : comps) {
        for (std::size_t i = 0; i < m.grid.n; ++i) {
            if (std::fabs(m.s[i] - c.s) >= r0) continue;
            double dyn = c.orientation * dv[i];
            if (!(dyn > 0.0))
                throw MonotonicityFailed(
                    r0, "build_collar: dV/dy_n changes sign in the collar at t = " +
                            std::to_string(m.grid.x(i)) + " (r0 = " + std::to_string(r0) + ")");
        }
    }
    // bands of distinct components must not intersect
    for (std::size_t a = 0; a + 1 < comps.size(); ++a)
        if (comps[a + 1].s - comps[a].s < 2.0 * r0)
            throw CollarOverlap("build_collar: collars of caustic components at s = " +
                                std::to_string(comps[a].s) + " and s = " +
                                std::to_string(comps[a + 1].s) + " overlap at r0 = " +
                                std::to_string(r0));

    const double ytiny = 1e-12 * r0;
    for (std::size_t i = 0; i < m.grid.n; ++i) {
        // nearest component in arclength
        std::size_t best = 0;
        double bestd = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < comps.size(); ++k) {
            double d = std::fabs(m.s[i] - comps[k].s);
            if (d < bestd) {
                bestd = d;
                best = k;
            }
        }
        if (bestd >= r0) continue;
        const auto& c = comps[best];
        double y = c.orientation * (m.s[i] - c.s);
        col.y_n.values[i] = y;
        col.y_n.mask[i] = 1;
        col.dVdyn[i] = c.orientation * dv[i];
        col.F.mask[i] = 1;
        col.F.values[i] = std::fabs(y) < ytiny ? col.dVdyn[i] : (m.V[i] - m.E) / y;
    }
    return col;
}

template <class P>
CollarRegion build_collar(const P& problem, double r0) {
    return build_collar(meridian_of(problem), r0);
}

/// Largest power-of-two r0 <= inj_proxy/2 for which the collar builds
/// cleanly; inj_proxy is half the spacing between caustic components, or
/// the distance to the domain ends for a lone component.
inline double default_r0(const MeridianModel& m) {
    auto comps = find_caustic_crossings(m);
    if (comps.empty()) throw NoCausticFound("default_r0: no caustic");
    double proxy = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < comps.size(); ++k) {
        proxy = std::min(proxy, comps[k].s - m.s.front());
        proxy = std::min(proxy, m.s.back() - comps[k].s);
        if (k + 1 < comps.size()) proxy = std::min(proxy, 0.5 * (comps[k + 1].s - comps[k].s));
    }
    double cap = 0.5 * proxy;
    if (!(cap > 0.0)) throw Error("default_r0: degenerate caustic layout");
    double r0 = std::pow(2.0, std::floor(std::log2(cap)));
    const double floor_r0 = 1e-6 * cap;
    while (r0 > floor_r0) {
        try {
            build_collar(m, r0);
            return r0;
        } catch (const MonotonicityFailed&) {
            r0 *= 0.5;
        } catch (const CollarOverlap&) {
            r0 *= 0.5;
        }
    }
    throw MonotonicityFailed(r0, "default_r0: no dyadic r0 yields a monotone collar");
}

template <class P>
double default_r0(const P& problem) {
    return default_r0(meridian_of(problem));
}

/// tau_0 = (max_{U_E(r0)} dV/dy_n / min_{U_E(r0) & forbidden} dV/dy_n)^(1/2).
inline double tau0(const CollarRegion& collar) {
    double mx = collar.max_dVdyn_collar();
    double mn = collar.min_dVdyn_forbidden();
    if (!(mn > 0.0))
        throw MonotonicityFailed(collar.r0, "tau0: normal derivative not positive on the forbidden collar");
    double ratio = mx / mn;
    // forbidden collar is a subset of the collar, so the ratio cannot dip below 1
    if (ratio < 1.0)
        throw Error("tau0: subset property violated (ratio < 1), collar data inconsistent");
    return std::sqrt(ratio);
}

}  // namespace sclab

#endif  // SCLAB_COLLAR_HPP
