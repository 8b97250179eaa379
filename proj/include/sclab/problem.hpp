#ifndef SCLAB_PROBLEM_HPP
#define SCLAB_PROBLEM_HPP

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sclab/config.hpp"
#include "sclab/errors.hpp"
#include "sclab/grid.hpp"

namespace sclab {

/// Scalar potential; named builtins or an interpolated table.
struct Potential {
    std::string name;
    std::function<double(double)> eval;

    double operator()(double x) const { return eval(x); }
};

inline Potential potential_linear() { return {"linear", [](double x) { return x; }}; }
inline Potential potential_airy() { return {"airy", [](double x) { return x; }}; }
inline Potential potential_quadratic() { return {"quadratic", [](double x) { return x * x; }}; }

/// Two-column (x, V) table with linear interpolation, constant extrapolation.
inline Potential potential_table(std::vector<double> xs, std::vector<double> vs) {
    if (xs.size() != vs.size() || xs.size() < 2)
        throw ConfigError("table potential: need >= 2 matching (x,V) rows");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw ConfigError("table potential: x column must be strictly increasing");
    auto fn = [xs = std::move(xs), vs = std::move(vs)](double x) {
        if (x <= xs.front()) return vs.front();
        if (x >= xs.back()) return vs.back();
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
        double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
        return (1.0 - t) * vs[i] + t * vs[i + 1];
    };
    return {"table", fn};
}

inline Potential potential_table_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("table potential: cannot open '" + path + "'");
    std::vector<double> xs, vs;
    std::string line;
    while (std::getline(in, line)) {
        line = detail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double x, v;
        if (!(row >> x >> v)) {
            if (xs.empty()) continue;  // tolerate a header row
            throw ConfigError("table potential: bad row '" + line + "'");
        }
        xs.push_back(x);
        vs.push_back(v);
    }
    return potential_table(std::move(xs), std::move(vs));
}

/// 1D Schrodinger problem: potential, interval domain, reference energy,
/// uniform grid, and the h sequence driving the semiclassical experiments.
struct Problem1D {
    Potential V;
    Grid1D grid;
    double E = 0.0;
    std::vector<double> h_seq;

    void validate() const {
        if (!(grid.dx() > 0.0)) throw ConfigError("Problem1D: grid spacing must be positive");
        if (h_seq.empty()) throw ConfigError("Problem1D: empty h sequence");
        for (std::size_t i = 0; i < h_seq.size(); ++i) {
            if (!(h_seq[i] > 0.0)) throw ConfigError("Problem1D: h values must be positive");
            if (i > 0 && !(h_seq[i] < h_seq[i - 1]))
                throw ConfigError("Problem1D: h values must be strictly decreasing");
        }
        for (std::size_t i = 0; i < grid.n; ++i)
            if (!std::isfinite(V(grid.x(i))))
                throw ConfigError("Problem1D: potential not finite on grid");
    }

    std::vector<double> sample_V() const {
        std::vector<double> v(grid.n);
        for (std::size_t i = 0; i < grid.n; ++i) v[i] = V(grid.x(i));
        return v;
    }
};

/// Revolution-surface profile z -> f(z) on (-1,1) with f(+-1) = 0.
/// f^2 is the smooth object near the poles; w = sqrt(1 + f'^2).
struct Profile {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> fsq_prime;  // (f^2)'
    double fsq_prime_at_minus1 = 0.0;
    double fsq_prime_at_plus1 = 0.0;

    double fprime(double z) const { return fsq_prime(z) / (2.0 * f(z)); }
    double w(double z) const {
        double fp = fprime(z);
        return std::sqrt(1.0 + fp * fp);
    }
};

inline Profile profile_sphere() {
    Profile p;
    p.name = "sphere";
    p.f = [](double z) { return std::sqrt(1.0 - z * z); };
    p.fsq_prime = [](double z) { return -2.0 * z; };
    p.fsq_prime_at_minus1 = 2.0;
    p.fsq_prime_at_plus1 = -2.0;
    return p;
}

/// Axisymmetric Schrodinger problem on the surface of revolution
/// g = w^2 dz^2 + f^2 dtheta^2, potential V(z), angular mode rule m(h).
struct RadialSurfaceProblem {
    enum class MRule { fixed, inverse_h };

    Profile profile;
    Potential V;  // V(z)
    double E = 0.0;
    double eta = 1e-3;  // pole truncation margin for the z-grid
    Grid1D zgrid;       // on [-1+eta, 1-eta]
    std::vector<double> h_seq;
    MRule m_rule = MRule::fixed;
    int m_fixed = 1;

    int m_of(double h) const {
        return m_rule == MRule::fixed ? m_fixed : static_cast<int>(std::llround(1.0 / h));
    }

    void validate() const {
        if (h_seq.empty()) throw ConfigError("RadialSurfaceProblem: empty h sequence");
        for (std::size_t i = 0; i < h_seq.size(); ++i) {
            if (!(h_seq[i] > 0.0)) throw ConfigError("RadialSurfaceProblem: h values must be positive");
            if (i > 0 && !(h_seq[i] < h_seq[i - 1]))
                throw ConfigError("RadialSurfaceProblem: h values must be strictly decreasing");
        }
        if (!(eta > 0.0) || zgrid.a < -1.0 + 0.5 * eta || zgrid.b > 1.0 - 0.5 * eta)
            throw ConfigError("RadialSurfaceProblem: grid must stay inside (-1+eta, 1-eta)");
        // profile sanity on the interior grid: f > 0 and f'' < 0
        const double dz = zgrid.dx();
        for (std::size_t i = 0; i < zgrid.n; ++i) {
            double z = zgrid.x(i);
            if (!(profile.f(z) > 0.0))
                throw ConfigError("RadialSurfaceProblem: profile must be positive on the grid");
            if (i > 0 && i + 1 < zgrid.n) {
                double fpp = (profile.f(z + dz) - 2.0 * profile.f(z) + profile.f(z - dz)) / (dz * dz);
                if (!(fpp < 0.0))
                    throw ConfigError("RadialSurfaceProblem: profile must be strictly concave");
            }
        }
        if (!(profile.fsq_prime_at_minus1 > 0.0) || !(profile.fsq_prime_at_plus1 < 0.0))
            throw ConfigError("RadialSurfaceProblem: (f^2)' pole limits must satisfy -+(f^2)'(+-1) > 0");
        // the caustic must keep distance > eta from the poles
        bool found = false;
        for (std::size_t i = 0; i + 1 < zgrid.n; ++i) {
            double d0 = V(zgrid.x(i)) - E, d1 = V(zgrid.x(i + 1)) - E;
            if (d0 == 0.0 || d0 * d1 < 0.0) {
                found = true;
                double zc = zgrid.x(i);
                if (1.0 - std::fabs(zc) <= eta)
                    throw ConfigError("RadialSurfaceProblem: caustic too close to a pole");
            }
        }
        if (!found) throw NoCausticFound("RadialSurfaceProblem: V - E has no sign change on the grid");
    }

    /// Meridian arclength s(z) = int_0^z w dt (ambient metric), tabulated
    /// on the z-grid by per-cell Simpson.
    std::vector<double> arclength_table() const {
        auto wf = [this](double z) { return profile.w(z); };
        std::vector<double> s(zgrid.n, 0.0);
        const double dz = zgrid.dx();
        // anchor at z = 0 so signs match the z axis
        std::vector<double> raw(zgrid.n, 0.0);
        for (std::size_t i = 0; i + 1 < zgrid.n; ++i) {
            double z0 = zgrid.x(i), z1 = z0 + dz;
            raw[i + 1] = raw[i] + (dz / 6.0) * (wf(z0) + 4.0 * wf(0.5 * (z0 + z1)) + wf(z1));
        }
        // subtract the value interpolated at z = 0 (grid may not contain 0)
        double s0 = 0.0;
        if (zgrid.contains(0.0)) {
            std::size_t c = zgrid.cell_of(0.0);
            double t = (0.0 - zgrid.x(c)) / dz;
            s0 = (1.0 - t) * raw[c] + t * raw[c + 1];
        }
        for (std::size_t i = 0; i < zgrid.n; ++i) s[i] = raw[i] - s0;
        return s;
    }
};

/// Named builtin problems ---------------------------------------------------

inline Problem1D make_airy_problem(std::size_t grid_n, std::vector<double> h_seq,
                                   double a = -5.0, double b = 5.0) {
    Problem1D p{potential_airy(), Grid1D(a, b, grid_n), 0.0, std::move(h_seq)};
    p.validate();
    return p;
}

/// Domain for R-like 1D problems: cut where V - E >= 5, pad by 20% of the
/// forbidden width, Dirichlet walls (Agmon decay makes the wall error
/// exponentially small).
inline Problem1D make_quadratic_problem(double E, std::size_t grid_n, std::vector<double> h_seq) {
    double cut = std::sqrt(E + 5.0);
    double caustic = E > 0.0 ? std::sqrt(E) : 0.0;
    double pad = 0.2 * (cut - caustic);
    double half = cut + pad;
    Problem1D p{potential_quadratic(), Grid1D(-half, half, grid_n), E, std::move(h_seq)};
    p.validate();
    return p;
}

inline RadialSurfaceProblem make_sphere_problem(std::size_t grid_n, std::vector<double> h_seq,
                                                int m_fixed = 1,
                                                RadialSurfaceProblem::MRule rule = RadialSurfaceProblem::MRule::fixed,
                                                double eta = 1e-3) {
    RadialSurfaceProblem p;
    p.profile = profile_sphere();
    p.V = potential_linear();
    p.E = 0.0;
    p.eta = eta;
    p.zgrid = Grid1D(-1.0 + eta, 1.0 - eta, grid_n);
    p.h_seq = std::move(h_seq);
    p.m_rule = rule;
    p.m_fixed = m_fixed;
    p.validate();
    return p;
}

/// Problem block loader shared by the CLI and tests. Recognized keys:
///   problem.kind       1d | surface
///   problem.potential  airy | linear | quadratic | table
///   problem.table      CSV path for potential = table
///   problem.a, problem.b, problem.E, problem.grid_n, problem.h
///   problem.profile    sphere  (surface only)
///   problem.m, problem.m_rule fixed | inverse-h, problem.eta
struct LoadedProblem {
    bool is_surface = false;
    Problem1D p1d;
    RadialSurfaceProblem surf;
};

inline Potential load_potential(const ConfigFile& cfg) {
    std::string name = cfg.get("problem.potential", "airy");
    if (name == "airy") return potential_airy();
    if (name == "linear") return potential_linear();
    if (name == "quadratic") return potential_quadratic();
    if (name == "table") {
        std::string path = cfg.get("problem.table");
        if (path.empty()) throw ConfigError("config: potential = table requires problem.table = <csv>");
        return potential_table_csv(path);
    }
    throw ConfigError("config: unknown potential '" + name + "'");
}

inline LoadedProblem load_problem(const ConfigFile& cfg) {
    LoadedProblem out;
    std::string kind = cfg.get("problem.kind", "1d");
    std::vector<double> h = cfg.get_list("problem.h");
    if (h.empty()) h = {0.1, 0.05, 0.025, 0.0125};
    auto grid_n = static_cast<std::size_t>(cfg.get_int("problem.grid_n", 2001));

    if (kind == "1d") {
        out.is_surface = false;
        Potential V = load_potential(cfg);
        double E = cfg.get_double("problem.E", V.name == "quadratic" ? 1.0 : 0.0);
        double a, b;
        if (cfg.has("problem.a") || cfg.has("problem.b")) {
            a = cfg.get_double("problem.a", -5.0);
            b = cfg.get_double("problem.b", 5.0);
        } else if (V.name == "quadratic") {
            out.p1d = make_quadratic_problem(E, grid_n, h);
            return out;
        } else {
            a = -5.0;
            b = 5.0;
        }
        out.p1d = Problem1D{std::move(V), Grid1D(a, b, grid_n), E, std::move(h)};
        out.p1d.validate();
        return out;
    }
    if (kind == "surface") {
        out.is_surface = true;
        std::string prof = cfg.get("problem.profile", "sphere");
        if (prof != "sphere") throw ConfigError("config: unknown profile '" + prof + "'");
        RadialSurfaceProblem p;
        p.profile = profile_sphere();
        std::string vname = cfg.get("problem.potential", "linear");
        if (vname == "linear" || vname == "airy")
            p.V = potential_linear();
        else if (vname == "table")
            p.V = potential_table_csv(cfg.get("problem.table"));
        else
            throw ConfigError("config: unsupported surface potential '" + vname + "'");
        p.E = cfg.get_double("problem.E", 0.0);
        p.eta = cfg.get_double("problem.eta", 1e-3);
        p.zgrid = Grid1D(-1.0 + p.eta, 1.0 - p.eta, grid_n);
        p.h_seq = std::move(h);
        std::string rule = cfg.get("problem.m_rule", "fixed");
        if (rule == "fixed")
            p.m_rule = RadialSurfaceProblem::MRule::fixed;
        else if (rule == "inverse-h")
            p.m_rule = RadialSurfaceProblem::MRule::inverse_h;
        else
            throw ConfigError("config: m_rule must be fixed or inverse-h");
        p.m_fixed = static_cast<int>(cfg.get_int("problem.m", 1));
        p.validate();
        out.surf = std::move(p);
        return out;
    }
    throw ConfigError("config: problem.kind must be 1d or surface");
}

}  // namespace sclab

#endif  // SCLAB_PROBLEM_HPP
