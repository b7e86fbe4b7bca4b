#pragma once

#include <string>

#include "gnwave/error.hpp"

namespace gnwave {

/// Uniform 1D grid. Cells C_i = [x_{i-1}, x_i] for i = 1..N are addressed
/// 0-based (cell j spans nodes j and j+1); nodes x_i = x0 + i*dx, i = 0..N.
struct Grid {
    double x0 = 0.0;
    double dx = 1.0;
    int n_cells = 0;

    Grid() = default;
    Grid(double x0_, double length, int n_cells_) : x0(x0_), n_cells(n_cells_) {
        detail::require(n_cells_ >= 7, "grid: need at least 7 cells (widest stencil)");
        detail::require(length > 0.0, "grid: length must be positive");
        dx = length / n_cells_;
    }

    int n_nodes() const { return n_cells + 1; }
    double node(int i) const { return x0 + i * dx; }
    double center(int j) const { return x0 + (j + 0.5) * dx; }
    double length() const { return n_cells * dx; }
};

} // namespace gnwave
