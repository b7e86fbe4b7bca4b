#include "gnwave/convergence.hpp"

#include <algorithm>
#include <cmath>

#include "gnwave/error.hpp"
#include "gnwave/scenarios.hpp"
#include "gnwave/state.hpp"
#include "gnwave/stepper.hpp"

namespace gnwave {

double fitted_slope(const std::vector<double>& dt, const std::vector<double>& err) {
    detail::require(dt.size() == err.size() && dt.size() >= 2,
                    "slope fit: need at least two matching points");
    const int n = static_cast<int>(dt.size());
    double sx = 0.0, sy = 0.0;
    std::vector<double> lx(n), ly(n);
    for (int i = 0; i < n; ++i) {
        detail::require(dt[i] > 0.0 && err[i] > 0.0, "slope fit: need positive data");
        lx[i] = std::log(dt[i]);
        ly[i] = std::log(err[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / n, my = sy / n;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    return num / den;
}

ConvergenceResult convergence_study(double a_over_h0, int n_levels, double dx0, double t_end) {
    detail::require(n_levels >= 2, "convergence: need at least two levels");
    detail::require(dx0 > 0.0, "convergence: dx0 must be positive");

    ConvergenceResult res;
    for (int level = 0; level < n_levels; ++level) {
        const double dx = dx0 / (1 << level);
        const int n_cells = static_cast<int>(std::lround(30.0 / dx));

        Scenario sc = solitary_scenario(a_over_h0, n_cells);
        sc.control.t_end = t_end;
        sc.control.breaking.enabled = false;

        SolitaryWaveParams p;
        p.h0 = 0.5;
        p.a = a_over_h0 * p.h0;
        p.x_center = 15.0;
        p.g = sc.phys.g;

        const double u_floor = 1e-12 * std::sqrt(sc.phys.g * p.h0);
        ConvergenceLevel lev;
        lev.dx = sc.grid.dx;
        lev.dt = sc.control.fixed_dt;

        const auto measure = [&](int, double t, const CellState& s, const BreakingMask&) {
            const CellState ref = solitary_cell_averages(p, sc.grid, t, true);
            double ez = 0.0, eu = 0.0, zmax = 0.0, umax = 0.0;
            for (int j = 0; j < sc.grid.n_cells; ++j) {
                ez = std::max(ez, std::abs(s.h[j] - ref.h[j]));
                zmax = std::max(zmax, std::abs(ref.h[j] - p.h0));
                const double u = velocity(s.h[j], s.q[j], sc.phys.eps_dry);
                const double ur = velocity(ref.h[j], ref.q[j], sc.phys.eps_dry);
                eu = std::max(eu, std::abs(u - ur));
                umax = std::max(umax, std::abs(ur));
            }
            lev.err_zeta = std::max(lev.err_zeta, ez / zmax);
            lev.err_u = std::max(lev.err_u, eu / std::max(umax, u_floor));
        };

        run_simulation(sc.initial, sc.bathy, sc.bc, sc.phys, sc.control, measure);
        res.levels.push_back(lev);
    }

    std::vector<double> dts, ez, eu;
    for (const ConvergenceLevel& lev : res.levels) {
        dts.push_back(lev.dt);
        ez.push_back(lev.err_zeta);
        eu.push_back(lev.err_u);
    }
    res.slope_zeta = fitted_slope(dts, ez);
    res.slope_u = fitted_slope(dts, eu);
    return res;
}

} // namespace gnwave
