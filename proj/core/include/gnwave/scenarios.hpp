#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gnwave/bathymetry.hpp"
#include "gnwave/boundary.hpp"
#include "gnwave/error.hpp"
#include "gnwave/grid.hpp"
#include "gnwave/physics.hpp"
#include "gnwave/state.hpp"
#include "gnwave/stepper.hpp"

namespace gnwave {

struct SolitaryWaveParams {
    double h0 = 0.5;     // [m]
    double a = 0.1;      // crest amplitude above h0 [m]
    double x_center = 0; // crest position at t = 0 [m]
    int direction = 1;   // +1 rightward, -1 leftward
    double g = 9.81;

    double celerity() const { return std::sqrt(g * (h0 + a)); }
    double kappa() const { return std::sqrt(3.0 * a) / (2.0 * h0 * std::sqrt(h0 + a)); }

    void validate() const {
        detail::require(h0 > 0.0 && a > 0.0 && g > 0.0, "solitary wave: h0, a, g must be > 0");
        detail::require(direction == 1 || direction == -1, "solitary wave: direction is +/-1");
    }
};

/// Closed-form traveling wave over a flat bottom:
///   h = h0 + a sech^2(kappa (x - x_c - c t dir)),  u = dir c (1 - h0/h),
/// so h u = dir c (h - h0) identically.
void solitary_wave(const SolitaryWaveParams& p, const std::vector<double>& x, double t,
                   std::vector<double>& h, std::vector<double>& u);

/// Exact cell averages of the profile (the sech^2 antiderivative is
/// tanh/kappa, and q is affine in h). On periodic grids the crest is wrapped
/// into the domain and one image per side is added.
CellState solitary_cell_averages(const SolitaryWaveParams& p, const Grid& grid, double t,
                                 bool periodic);

/// Rest superposed with the wave over general bathymetry:
/// h = max(0, (h0 - b) + dh), q = dir c dh, with dh the exact cell-averaged
/// excess column. Meaningful when the wave starts over the flat part.
CellState solitary_over_bathymetry(const SolitaryWaveParams& p, const Grid& grid,
                                   const Bathymetry& bathy);

/// h = max(0, h0 + zeta0 - b), q = 0; dry where the bottom pierces the surface.
CellState lake_at_rest(const Bathymetry& bathy, double zeta0 = 0.0);

std::vector<double> flat_bottom(const Grid& grid);

enum class Shoreward { left, right };

/// Zero beyond the toe, rising linearly shoreward; ratio is the tangent
/// (a 1:50 beach passes 0.02).
std::vector<double> beach_profile(const Grid& grid, double ratio, double toe, Shoreward side);

/// A ready-to-run setup: geometry, physics, initial data, recommended time
/// control and gauge positions.
struct Scenario {
    std::string name;
    Grid grid;
    Bathymetry bathy;
    BcPair bc;
    Physics phys;
    CellState initial;
    TimeControl control;
    std::vector<double> gauges;
};

/// 30 m periodic flat-bottom domain, h0 = 0.5 m, alpha = 1 (the regime with
/// the closed-form wave), step size dx/sqrt(g h0).
Scenario solitary_scenario(double a_over_h0, int n_cells = 240);

/// 60 m domain, 1:50 beach toward a wall at x = 0 (toe at 20 m), h0 = 0.7 m,
/// wave centered at 50 m moving left; 500 cells, dt = 0.05 s, gauge 17.75 m.
Scenario wall_reflection_scenario(double a_over_h0);

/// 36 m flume, 1:30 beach (toe 20 m), h0 = 0.25 m, dx = 0.025 m,
/// dt = 0.016 s; gauges per catalogued amplitude, placed seaward of the rest
/// shoreline at 27.5 m.
Scenario shoaling_scenario(double a_over_h0);

/// 1:19.85 beach rising leftward from a toe at x = 0, h0 = 0.3 m, domain
/// [-13, 30.2] m at dx = 0.08 m, dt = 0.02 s, run to t sqrt(g/h0) = 70.
Scenario synolakis_scenario(double a_over_h0 = 0.28, double friction = 0.002);

/// 2 m periodic domain, h0 = 1 m (kh0 = pi), 50 cells, dt = 0.03 s; cosine
/// initial data of the given amplitude unless replaced by an imported wave.
Scenario periodic_wave_scenario(double amplitude = 0.01, double alpha = 1.159);

Scenario make_scenario(const std::string& name);
std::vector<std::string> scenario_names();

} // namespace gnwave
