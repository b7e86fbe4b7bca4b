#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace gnwave {

/// Cell-averaged water height and discharge (finite-volume unknowns).
struct CellState {
    std::vector<double> h;
    std::vector<double> q;
};

/// Point values at grid nodes (finite-difference unknowns).
struct NodalState {
    std::vector<double> h;
    std::vector<double> q;
};

/// Velocity with a desingularized dry guard. Comfortably wet columns
/// (h >= 100 eps) divide exactly, so the wet scheme is untouched; below that
/// the ratio rolls off smoothly, u = sqrt(2) h q / sqrt(h^4 + e^4), which
/// matches q/h at the seam and decays to zero with h. A hard u = q/h cutoff
/// at eps lets a reconstructed sliver of water with leftover discharge
/// report speeds of q/eps, which detonates a wetting front within a few
/// steps; the roll-off caps the sliver's speed at q/e instead.
inline double velocity(double h, double q, double eps) {
    const double e = 100.0 * eps;
    if (h >= e) return q / h;
    if (h <= 0.0 || q == 0.0) return 0.0;
    const double h2 = h * h, e2 = e * e;
    return std::numbers::sqrt2 * h * q / std::sqrt(h2 * h2 + e2 * e2);
}

// Vector-space helpers used by the RK4 driver.
std::vector<double> axpy(const std::vector<double>& y, double a, const std::vector<double>& k);
CellState axpy(const CellState& y, double a, const CellState& k);

} // namespace gnwave
