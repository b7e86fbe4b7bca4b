#pragma once

#include <vector>

#include "gnwave/bathymetry.hpp"
#include "gnwave/boundary.hpp"
#include "gnwave/physics.hpp"
#include "gnwave/state.hpp"

namespace gnwave {

struct BreakingConfig {
    bool enabled = true;
    double theta = 0.5; // flag cells dissipating more than theta * peak
    double floor = -1.0; // peak must exceed this to flag anything; <0 picks
                         // 1e-3 * rho * g * h0 * sqrt(g h0) automatically
    int halo = 3;        // widen each flagged cell by this many neighbours

    void validate() const {
        detail::require(theta > 0.0 && theta <= 1.0, "breaking: theta must be in (0, 1]");
        detail::require(halo >= 0, "breaking: halo must be >= 0");
    }
};

struct BreakingMask {
    std::vector<char> cell; // n_cells
    std::vector<char> node; // n_cells + 1; set when an adjacent cell is set
    double max_dissipation = 0.0;

    bool any() const;
    bool all_nodes() const;
};

/// Mechanical energy density E = (rho/2)(h u^2 + g zeta^2) per cell.
std::vector<double> cell_energy(const CellState& s, const Bathymetry& bathy,
                                const Physics& phys);

/// Energy flux F = rho h u (u^2/2 + g zeta) per cell.
std::vector<double> cell_energy_flux(const CellState& s, const Bathymetry& bathy,
                                     const Physics& phys);

/// Flag cells where the hyperbolic substep dissipated energy fast enough to
/// stand in for a breaking front: D_i = -[(E_i^after - E_i^before)/dt
/// + centered div of F^after], flagged where D_i > theta * max_j D_j and the
/// peak clears the floor. The cell mask is dilated by `halo`, then nodes
/// inherit flags from adjacent cells.
BreakingMask detect_breaking(const CellState& before, const CellState& after, double dt,
                             const Bathymetry& bathy, const Physics& phys, BcPair bc,
                             const BreakingConfig& cfg);

} // namespace gnwave
