#pragma once

#include <vector>

#include "gnwave/boundary.hpp"
#include "gnwave/grid.hpp"

namespace gnwave {

/// Bottom elevation b(x) measured upward from the reference depth z = -h0,
/// so the still-water depth is h0 - b and the free surface is
/// zeta = h + b - h0. Nodal values are primary; cell averages come from
/// node_to_cell so both representations balance the same rest state, and the
/// spatial derivatives are the solver's own nodal stencils.
struct Bathymetry {
    double h0 = 1.0;
    double dx = 1.0;
    std::vector<double> node;    // b at nodes (n_cells + 1)
    std::vector<double> cell;    // cell averages (n_cells)
    std::vector<double> dbdx;    // nodal d b / dx
    std::vector<double> d2bdx2;  // nodal d^2 b / dx^2
    std::vector<double> d3bdx3;  // nodal d^3 b / dx^3
};

Bathymetry make_bathymetry(const Grid& grid, double h0, std::vector<double> b_node, BcPair bc);

} // namespace gnwave
