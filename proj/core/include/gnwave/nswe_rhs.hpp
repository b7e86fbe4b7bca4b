#pragma once

#include "gnwave/bathymetry.hpp"
#include "gnwave/boundary.hpp"
#include "gnwave/physics.hpp"
#include "gnwave/state.hpp"

namespace gnwave {

/// Semi-discrete right-hand side of the hyperbolic (shallow-water) part:
/// limited MUSCL reconstruction of h, q and the free surface, hydrostatic
/// reconstruction of interface states for well-balanced topography terms,
/// two-speed numerical flux, and the centered momentum source. Cells at or
/// below the dry threshold are inert: their slopes and momentum sources are
/// suppressed, and interfaces whose hydrostatically reconstructed depths are
/// both below the threshold carry exactly zero flux, so a clamped thin film
/// on an emerged slope is an exact fixed point.
CellState nswe_rhs(const CellState& s, const Bathymetry& bathy, BcPair bc, const Physics& phys);

} // namespace gnwave
