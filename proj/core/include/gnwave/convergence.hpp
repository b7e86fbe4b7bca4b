#pragma once

#include <vector>

namespace gnwave {

struct ConvergenceLevel {
    double dx = 0.0;
    double dt = 0.0;
    double err_zeta = 0.0; // max over time of the relative Linf surface error
    double err_u = 0.0;    // same for velocity
};

struct ConvergenceResult {
    std::vector<ConvergenceLevel> levels;
    double slope_zeta = 0.0; // least-squares slope of log err vs log dt
    double slope_u = 0.0;
};

/// Least-squares slope of log(err) against log(dt) over the levels.
double fitted_slope(const std::vector<double>& dt, const std::vector<double>& err);

/// Propagate the closed-form wave (30 m periodic domain, h0 = 0.5 m,
/// alpha = 1) to t_end on grids refined from dx0 by halving, with
/// dt = dx/sqrt(g h0) at every level, and measure the worst-over-time
/// relative errors against the translated exact profile. Breaking detection
/// is off: the error measurement needs the untouched scheme.
ConvergenceResult convergence_study(double a_over_h0, int n_levels, double dx0 = 1.0,
                                    double t_end = 3.0);

} // namespace gnwave
