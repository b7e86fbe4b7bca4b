#include "gnwave/bathymetry.hpp"

#include "gnwave/conversions.hpp"
#include "gnwave/error.hpp"
#include "gnwave/fd_stencils.hpp"

namespace gnwave {

Bathymetry make_bathymetry(const Grid& grid, double h0, std::vector<double> b_node, BcPair bc) {
    detail::require(static_cast<int>(b_node.size()) == grid.n_nodes(),
                    "make_bathymetry: b_node must have one value per node");
    detail::require(h0 > 0.0, "make_bathymetry: h0 must be positive");
    Bathymetry b;
    b.h0 = h0;
    b.dx = grid.dx;
    b.cell = node_to_cell(b_node, bc, Parity::even);
    b.dbdx = fd_derivative(b_node, 1, grid.dx, bc, Parity::even);
    b.d2bdx2 = fd_derivative(b_node, 2, grid.dx, bc, Parity::even);
    b.d3bdx3 = fd_derivative(b_node, 3, grid.dx, bc, Parity::even);
    b.node = std::move(b_node);
    return b;
}

} // namespace gnwave
